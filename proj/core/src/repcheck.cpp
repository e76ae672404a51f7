#include "sl12/repcheck.hpp"

#include "sl12/errors.hpp"

namespace sl12 {

const char* to_string(IrreducibilityReport::Verdict v) {
  return v == IrreducibilityReport::Verdict::irreducible ? "irreducible" : "reducible";
}

const char* to_string(QClass c) {
  switch (c) {
    case QClass::excluded: return "excluded";
    case QClass::halved: return "halvedQ";
    case QClass::generic: return "generic";
  }
  return "generic";
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::generates: return "generates";
    case Conclusion::not_established: return "not_established";
    case Conclusion::excluded_diagnostic: return "excluded_diagnostic";
  }
  return "not_established";
}

QClass classify_q(const Natural& q) {
  if (q == 2 || q == 4) return QClass::excluded;
  if (q == 3 || q == 7) return QClass::halved;
  return QClass::generic;
}

std::vector<Subspace> z_invariant_lattice(const BaseField& F, const Mat& z, const Poly& f,
                                          const AlphaVector& alpha) {
  const std::size_t n = z.dim();
  const FqElem eigen = F.inv(alpha.at(11));
  Subspace w1 = mat::kernel(F, mat::shift(F, z, eigen));
  if (w1.dim() != 1) {
    throw ConsistencyError("lattice", "dim ker(z - alpha_11^{-1} I) = " + std::to_string(w1.dim()) + ", expected 1");
  }
  Subspace u = mat::kernel(F, mat::eval_poly(F, f, z));
  if (u.dim() != n - 1) {
    throw ConsistencyError("lattice", "dim ker f(z) = " + std::to_string(u.dim()) + ", expected " +
                                          std::to_string(n - 1));
  }
  return {Subspace::zero(n), std::move(w1), std::move(u), Subspace::full(n)};
}

bool stability_check(const BaseField& F, const Subspace& W, const Mat& g) {
  for (const auto& b : W.basis()) {
    if (!W.contains(F, mat::apply(F, g, b))) return false;
  }
  return true;
}

std::vector<CommonEigenReport> common_eigenvector_scan(const BaseField& F, const Mat& x, const Mat& y) {
  std::vector<FqElem> nus{F.one()};
  if (F.neg(F.one()) != F.one()) nus.push_back(F.neg(F.one()));

  std::vector<CommonEigenReport> out;
  for (std::uint32_t code = 1; code < F.order(); ++code) {
    const FqElem lambda{code};
    if (F.pow(lambda, 3) != F.one()) continue;
    const Subspace ky = mat::kernel(F, mat::shift(F, y, lambda));
    for (FqElem nu : nus) {
      const Subspace both = intersect(F, ky, mat::kernel(F, mat::shift(F, x, nu)));
      CommonEigenReport r{lambda, nu, both.dim(), std::nullopt};
      if (both.dim() > 0) r.witness = both.basis().front();
      out.push_back(std::move(r));
    }
  }
  return out;
}

Subspace spin_oracle(const BaseField& F, std::vector<Vec> seeds, const std::vector<Mat>& gens) {
  const std::size_t n = gens.empty() ? (seeds.empty() ? 0 : seeds.front().size()) : gens.front().dim();
  Subspace current = Subspace::span(F, n, std::move(seeds));
  std::vector<Vec> frontier = current.basis();
  while (!frontier.empty()) {
    std::vector<Vec> found;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Vec image = mat::apply(F, g, v);
        if (current.contains(F, image)) continue;
        std::vector<Vec> grown = current.basis();
        grown.push_back(image);
        current = Subspace::span(F, n, std::move(grown));
        found.push_back(std::move(image));
      }
    }
    frontier = std::move(found);
  }
  return current;
}

IrreducibilityReport irreducibility_verdict(const BaseField& F, const GeneratorTriple& triple, const Poly& f) {
  IrreducibilityReport report;
  report.z_invariant_lattice = z_invariant_lattice(F, triple.z, f, triple.alpha);
  for (const auto& w : report.z_invariant_lattice) {
    report.y_stable.push_back(stability_check(F, w, triple.y));
    report.x_stable.push_back(stability_check(F, w, triple.x));
  }
  report.common_eigen = common_eigenvector_scan(F, triple.x, triple.y);

  // Every <x, y>-invariant subspace is z-invariant, so the proper nonzero
  // members of the lattice are the only candidates.
  for (std::size_t i = 1; i + 1 < report.z_invariant_lattice.size(); ++i) {
    if (report.y_stable[i]) {
      report.verdict = IrreducibilityReport::Verdict::reducible;
      report.witness = report.z_invariant_lattice[i];
      return report;
    }
  }
  for (const auto& e : report.common_eigen) {
    if (e.intersection_dim > 0) {
      report.verdict = IrreducibilityReport::Verdict::reducible;
      report.witness = Subspace::span(F, triple.x.dim(), {*e.witness});
      return report;
    }
  }
  return report;
}

GenerationVerdict generation_verdict(const IrreducibilityReport& report, bool order_ok, const Natural& q,
                                     std::map<std::string, bool> checks) {
  GenerationVerdict v;
  v.q_class = classify_q(q);
  checks["z_order"] = order_ok;
  checks["irreducible"] = report.verdict == IrreducibilityReport::Verdict::irreducible;
  v.checks = std::move(checks);
  for (const auto& [name, ok] : v.checks) {
    if (!ok) v.failed.push_back(name);
  }
  if (v.q_class == QClass::excluded) {
    v.conclusion = Conclusion::excluded_diagnostic;
  } else if (v.failed.empty()) {
    v.conclusion = Conclusion::generates;
  } else {
    v.conclusion = Conclusion::not_established;
  }
  return v;
}

}  // namespace sl12
