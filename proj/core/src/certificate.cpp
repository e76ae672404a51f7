#include "sl12/certificate.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include <json.hpp>

#include "sl12/errors.hpp"

namespace sl12 {
namespace {

using json = nlohmann::json;

// Digit-level codec for GF(q) elements. Needs only p and m, so it works
// before (and independently of) building the field from h.
class Codec {
 public:
  Codec(std::uint32_t p, unsigned m) : p_(p), m_(m) {}

  json elem(FqElem a) const {
    json out = json::array();
    for (unsigned i = 0; i < m_; ++i) {
      out.push_back(a.code % p_);
      a.code /= p_;
    }
    return out;
  }

  FqElem elem_from(const json& j, const std::string& path) const {
    if (!j.is_array() || j.size() != m_) throw FormatError(path, "expected an array of " + std::to_string(m_) + " digits");
    std::uint64_t code = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      code += digit(j[i], path + "/" + std::to_string(i)) * place;
      place *= p_;
    }
    return {static_cast<std::uint32_t>(code)};
  }

  std::uint32_t digit(const json& j, const std::string& path) const {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= p_) {
      throw FormatError(path, "expected a digit in [0, " + std::to_string(p_) + ")");
    }
    return j.get<std::uint32_t>();
  }

  json vec(const Vec& v) const {
    json out = json::array();
    for (FqElem a : v) out.push_back(elem(a));
    return out;
  }

  Vec vec_from(const json& j, const std::string& path, std::optional<std::size_t> len = std::nullopt) const {
    if (!j.is_array() || (len && j.size() != *len)) throw FormatError(path, "expected an array of field elements");
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(elem_from(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  json poly(const Poly& f) const { return vec(f.coeffs()); }

  Poly poly_from(const json& j, const std::string& path) const {
    Vec c = vec_from(j, path);
    if (!c.empty() && c.back().code == 0) throw FormatError(path, "trailing zero coefficient");
    return Poly(std::move(c));
  }

  json mat(const Mat& a) const {
    json out = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(elem(a(i, k)));
      out.push_back(std::move(row));
    }
    return out;
  }

  Mat mat_from(const json& j, const std::string& path) const {
    if (!j.is_array()) throw FormatError(path, "expected an array of rows");
    const std::size_t n = j.size();
    std::vector<FqElem> entries;
    for (std::size_t i = 0; i < n; ++i) {
      Vec row = vec_from(j[i], path + "/" + std::to_string(i), n);
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Mat(n, std::move(entries));
  }

  json subspace(const Subspace& s) const {
    json basis = json::array();
    for (const auto& v : s.basis()) basis.push_back(vec(v));
    return {{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}, {"dim", s.dim()}};
  }

  Subspace subspace_from(const json& j, const std::string& path) const;

 private:
  std::uint32_t p_;
  unsigned m_;
};

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(path + "/" + key, "missing field");
  return *it;
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) == keys.end()) {
      throw FormatError(path + "/" + it.key(), "unknown field");
    }
  }
}

Natural natural_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a decimal string");
  auto n = parse_natural(j.get<std::string>());
  if (!n) throw FormatError(path, "expected a decimal string");
  return *n;
}

std::uint64_t uint_from(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw FormatError(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

bool bool_from(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw FormatError(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a string");
  return j.get<std::string>();
}

Subspace Codec::subspace_from(const json& j, const std::string& path) const {
  expect_keys(j, {"ambient_dim", "basis", "dim"}, path);
  const auto n = uint_from(field(j, "ambient_dim", path), path + "/ambient_dim");
  const auto& basis = field(j, "basis", path);
  if (!basis.is_array()) throw FormatError(path + "/basis", "expected an array");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) rows.push_back(vec_from(basis[i], path + "/basis/" + std::to_string(i), n));
  if (uint_from(field(j, "dim", path), path + "/dim") != rows.size()) throw FormatError(path + "/dim", "does not match basis");
  try {
    return Subspace::from_rref(n, std::move(rows));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path + "/basis", e.what());
  }
}

json encode_factored(const FactoredInteger& f) {
  json out = json::array();
  for (const auto& pp : f.factors) out.push_back({{"exponent", pp.exponent}, {"prime", to_decimal(pp.prime)}});
  return out;
}

json encode_report(const Codec& c, const IrreducibilityReport& r) {
  json lattice = json::array();
  for (const auto& s : r.z_invariant_lattice) lattice.push_back(c.subspace(s));
  json eigen = json::array();
  for (const auto& e : r.common_eigen) {
    eigen.push_back({{"intersection_dim", e.intersection_dim},
                     {"lambda", c.elem(e.lambda)},
                     {"nu", c.elem(e.nu)},
                     {"witness", e.witness ? c.vec(*e.witness) : json(nullptr)}});
  }
  return {{"common_eigen", std::move(eigen)},
          {"lattice", std::move(lattice)},
          {"verdict", to_string(r.verdict)},
          {"witness", r.witness ? c.subspace(*r.witness) : json(nullptr)},
          {"x_stable", r.x_stable},
          {"y_stable", r.y_stable}};
}

json encode_verdict(const GenerationVerdict& v) {
  return {{"checks", v.checks}, {"conclusion", to_string(v.conclusion)}, {"failed", v.failed}, {"q_class", to_string(v.q_class)}};
}

std::vector<bool> bools_from(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array of booleans");
  std::vector<bool> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(bool_from(j[i], path + "/" + std::to_string(i)));
  return out;
}

IrreducibilityReport decode_report(const Codec& c, const json& j, const std::string& path) {
  expect_keys(j, {"common_eigen", "lattice", "verdict", "witness", "x_stable", "y_stable"}, path);
  IrreducibilityReport r;
  const auto& lattice = field(j, "lattice", path);
  if (!lattice.is_array()) throw FormatError(path + "/lattice", "expected an array");
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    r.z_invariant_lattice.push_back(c.subspace_from(lattice[i], path + "/lattice/" + std::to_string(i)));
  }
  r.y_stable = bools_from(field(j, "y_stable", path), path + "/y_stable");
  r.x_stable = bools_from(field(j, "x_stable", path), path + "/x_stable");
  const auto& eigen = field(j, "common_eigen", path);
  if (!eigen.is_array()) throw FormatError(path + "/common_eigen", "expected an array");
  for (std::size_t i = 0; i < eigen.size(); ++i) {
    const std::string ep = path + "/common_eigen/" + std::to_string(i);
    expect_keys(eigen[i], {"intersection_dim", "lambda", "nu", "witness"}, ep);
    CommonEigenReport e;
    e.lambda = c.elem_from(field(eigen[i], "lambda", ep), ep + "/lambda");
    e.nu = c.elem_from(field(eigen[i], "nu", ep), ep + "/nu");
    e.intersection_dim = uint_from(field(eigen[i], "intersection_dim", ep), ep + "/intersection_dim");
    const auto& w = field(eigen[i], "witness", ep);
    if (!w.is_null()) e.witness = c.vec_from(w, ep + "/witness");
    r.common_eigen.push_back(std::move(e));
  }
  const std::string verdict = string_from(field(j, "verdict", path), path + "/verdict");
  if (verdict == "irreducible") {
    r.verdict = IrreducibilityReport::Verdict::irreducible;
  } else if (verdict == "reducible") {
    r.verdict = IrreducibilityReport::Verdict::reducible;
  } else {
    throw FormatError(path + "/verdict", "unknown verdict");
  }
  const auto& w = field(j, "witness", path);
  if (!w.is_null()) r.witness = c.subspace_from(w, path + "/witness");
  return r;
}

GenerationVerdict decode_verdict(const json& j, const std::string& path) {
  expect_keys(j, {"checks", "conclusion", "failed", "q_class"}, path);
  GenerationVerdict v;
  const auto& checks = field(j, "checks", path);
  if (!checks.is_object()) throw FormatError(path + "/checks", "expected an object");
  for (auto it = checks.begin(); it != checks.end(); ++it) {
    v.checks[it.key()] = bool_from(it.value(), path + "/checks/" + it.key());
  }
  const std::string conclusion = string_from(field(j, "conclusion", path), path + "/conclusion");
  if (conclusion == "generates") v.conclusion = Conclusion::generates;
  else if (conclusion == "not_established") v.conclusion = Conclusion::not_established;
  else if (conclusion == "excluded_diagnostic") v.conclusion = Conclusion::excluded_diagnostic;
  else throw FormatError(path + "/conclusion", "unknown conclusion");
  const auto& failed = field(j, "failed", path);
  if (!failed.is_array()) throw FormatError(path + "/failed", "expected an array");
  for (std::size_t i = 0; i < failed.size(); ++i) v.failed.push_back(string_from(failed[i], path + "/failed/" + std::to_string(i)));
  const std::string q_class = string_from(field(j, "q_class", path), path + "/q_class");
  if (q_class == "excluded") v.q_class = QClass::excluded;
  else if (q_class == "halvedQ") v.q_class = QClass::halved;
  else if (q_class == "generic") v.q_class = QClass::generic;
  else throw FormatError(path + "/q_class", "unknown class");
  return v;
}

}  // namespace

FactoredInteger factored_Q_from(const FactoredInteger& group, bool halved) {
  if (!halved) return group;
  FactoredInteger out{group.value / 2, {}};
  for (const auto& pp : group.factors) {
    if (pp.prime == 2) {
      if (pp.exponent > 1) out.factors.push_back({pp.prime, pp.exponent - 1});
    } else {
      out.factors.push_back(pp);
    }
  }
  return out;
}

std::string encode(const Certificate& cert) {
  if (cert.p > BaseField::kMaxOrder) throw Error("encode: p out of range");
  const Codec c(static_cast<std::uint32_t>(cert.p), cert.m);

  json h = json::array();
  for (FqElem d : cert.h.coeffs()) h.push_back(d.code);
  json alpha = json::array();
  for (FqElem a : cert.alpha.values) alpha.push_back(c.elem(a));
  json omega = json::array();
  for (FqElem a : cert.omega.c) omega.push_back(c.elem(a));
  json mode = cert.omega_mode.kind == OmegaMode::Kind::deterministic
                  ? json{{"kind", "deterministic"}}
                  : json{{"kind", "seeded"}, {"seed", std::to_string(cert.omega_mode.seed)}};

  json doc = {
      {"Q", to_decimal(cert.Q)},
      {"Q_halved", cert.Q_halved},
      {"alpha", std::move(alpha)},
      {"assumption", {{"citation", cert.assumption.citation}, {"id", cert.assumption.id}, {"text", cert.assumption.text}}},
      {"f", c.poly(cert.f)},
      {"factored_Q", encode_factored(cert.factored_Q)},
      {"g", c.poly(cert.g)},
      {"h", std::move(h)},
      {"m", cert.m},
      {"omega", std::move(omega)},
      {"omega_mode", std::move(mode)},
      {"p", to_decimal(cert.p)},
      {"q", to_decimal(cert.q)},
      {"reports", {{"generation", encode_verdict(cert.generation)}, {"irreducibility", encode_report(c, cert.irreducibility)}}},
      {"schema_version", cert.schema_version},
      {"x", c.mat(cert.x)},
      {"y", c.mat(cert.y)},
      {"z", c.mat(cert.z)},
  };
  return doc.dump();
}

Certificate decode(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("", std::string("invalid JSON: ") + e.what());
  }
  expect_keys(doc, {"Q", "Q_halved", "alpha", "assumption", "f", "factored_Q", "g", "h", "m", "omega", "omega_mode", "p",
                    "q", "reports", "schema_version", "x", "y", "z"},
              "");

  Certificate cert;
  cert.schema_version = string_from(field(doc, "schema_version", ""), "/schema_version");
  cert.p = natural_from(field(doc, "p", ""), "/p");
  if (cert.p < 2 || cert.p > BaseField::kMaxOrder) throw FormatError("/p", "p outside the supported range");
  const auto m = uint_from(field(doc, "m", ""), "/m");
  if (m < 1 || m > 64) throw FormatError("/m", "m outside the supported range");
  cert.m = static_cast<unsigned>(m);
  cert.q = natural_from(field(doc, "q", ""), "/q");
  if (power(cert.p, cert.m) > BaseField::kMaxOrder) throw FormatError("/m", "p^m exceeds the supported field size");

  const Codec c(static_cast<std::uint32_t>(cert.p), cert.m);
  const Codec prime(static_cast<std::uint32_t>(cert.p), 1);

  const auto& h = field(doc, "h", "");
  if (!h.is_array()) throw FormatError("/h", "expected an array of digits");
  std::vector<FqElem> h_coeffs;
  for (std::size_t i = 0; i < h.size(); ++i) h_coeffs.push_back({prime.digit(h[i], "/h/" + std::to_string(i))});
  if (!h_coeffs.empty() && h_coeffs.back().code == 0) throw FormatError("/h", "trailing zero coefficient");
  cert.h = Poly(std::move(h_coeffs));
  cert.g = c.poly_from(field(doc, "g", ""), "/g");

  cert.Q = natural_from(field(doc, "Q", ""), "/Q");
  cert.Q_halved = bool_from(field(doc, "Q_halved", ""), "/Q_halved");
  const auto& factored = field(doc, "factored_Q", "");
  if (!factored.is_array()) throw FormatError("/factored_Q", "expected an array");
  cert.factored_Q.value = cert.Q;
  for (std::size_t i = 0; i < factored.size(); ++i) {
    const std::string fp = "/factored_Q/" + std::to_string(i);
    expect_keys(factored[i], {"exponent", "prime"}, fp);
    const auto e = uint_from(field(factored[i], "exponent", fp), fp + "/exponent");
    if (e == 0 || e > 1024) throw FormatError(fp + "/exponent", "exponent out of range");
    cert.factored_Q.factors.push_back({natural_from(field(factored[i], "prime", fp), fp + "/prime"), static_cast<unsigned>(e)});
  }

  const auto& omega = field(doc, "omega", "");
  if (!omega.is_array() || omega.size() != kExtDegree) throw FormatError("/omega", "expected 11 field elements");
  for (std::size_t i = 0; i < kExtDegree; ++i) cert.omega.c[i] = c.elem_from(omega[i], "/omega/" + std::to_string(i));

  const auto& mode = field(doc, "omega_mode", "");
  const std::string kind = string_from(field(mode, "kind", "/omega_mode"), "/omega_mode/kind");
  if (kind == "deterministic") {
    expect_keys(mode, {"kind"}, "/omega_mode");
    cert.omega_mode = OmegaMode::deterministic();
  } else if (kind == "seeded") {
    expect_keys(mode, {"kind", "seed"}, "/omega_mode");
    const Natural seed = natural_from(field(mode, "seed", "/omega_mode"), "/omega_mode/seed");
    if (seed > std::numeric_limits<std::uint64_t>::max()) throw FormatError("/omega_mode/seed", "seed exceeds 64 bits");
    cert.omega_mode = OmegaMode::seeded(static_cast<std::uint64_t>(seed));
  } else {
    throw FormatError("/omega_mode/kind", "unknown mode");
  }

  cert.f = c.poly_from(field(doc, "f", ""), "/f");
  const auto& alpha = field(doc, "alpha", "");
  if (!alpha.is_array() || alpha.size() != kExtDegree) throw FormatError("/alpha", "expected 11 field elements");
  for (std::size_t i = 0; i < kExtDegree; ++i) cert.alpha.values[i] = c.elem_from(alpha[i], "/alpha/" + std::to_string(i));

  cert.x = c.mat_from(field(doc, "x", ""), "/x");
  cert.y = c.mat_from(field(doc, "y", ""), "/y");
  cert.z = c.mat_from(field(doc, "z", ""), "/z");

  const auto& reports = field(doc, "reports", "");
  expect_keys(reports, {"generation", "irreducibility"}, "/reports");
  cert.irreducibility = decode_report(c, field(reports, "irreducibility", "/reports"), "/reports/irreducibility");
  cert.generation = decode_verdict(field(reports, "generation", "/reports"), "/reports/generation");

  const auto& assumption = field(doc, "assumption", "");
  expect_keys(assumption, {"citation", "id", "text"}, "/assumption");
  cert.assumption.citation = string_from(field(assumption, "citation", "/assumption"), "/assumption/citation");
  cert.assumption.id = string_from(field(assumption, "id", "/assumption"), "/assumption/id");
  cert.assumption.text = string_from(field(assumption, "text", "/assumption"), "/assumption/text");
  return cert;
}

FactoredInteger group_order_from(const FactoredInteger& factored_Q, bool halved) {
  if (!halved) return factored_Q;
  FactoredInteger out{factored_Q.value * 2, {}};
  bool placed = false;
  for (const auto& pp : factored_Q.factors) {
    if (pp.prime == 2) {
      out.factors.push_back({pp.prime, pp.exponent + 1});
      placed = true;
    } else {
      out.factors.push_back(pp);
    }
  }
  if (!placed) out.factors.insert(out.factors.begin(), {Natural(2), 1});
  return out;
}

Derivation derive(const FieldSpec& spec, const ExtElem& omega, const QValue& Q, const FactoredInteger& factored_Q,
                  const FactoredInteger& group_order) {
  const BaseField& F = *spec.base;
  const ExtField& E = *spec.ext;
  const Natural q = spec.q();
  std::map<std::string, bool> checks;

  checks["omega_order"] = !E.is_zero(omega) && multiplicative_order(E, omega, group_order) == Q.Q;

  MinimalPolynomial mp = min_poly_of_omega(spec, omega);
  const Poly& f = mp.f;
  checks["f_irreducible"] = f.degree() == kExtDegree && f.is_monic() && is_irreducible(F, f);
  checks["f_oracle"] = min_poly_oracle(E, omega) == f;

  const FqElem a11 = mp.alpha.at(11);
  bool a11_ok = a11.code != 0 && E.embed(a11) == E.pow(omega, (E.order() - 1) / (q - 1));
  if (a11_ok) {
    if (q == 3) {
      a11_ok = a11 == F.one();
    } else if (q == 7) {
      a11_ok = F.pow(a11, 3) == F.one() && a11 != F.one();
    } else {
      a11_ok = F.multiplicative_order(a11) == q - 1;
    }
  }
  checks["alpha11_class"] = a11_ok;
  if (a11.code == 0) throw ConsistencyError("alpha11_class", "alpha_11 is zero");

  GeneratorTriple triple{assemble_x(F, mp.alpha), build_y(F), Mat{}, mp.alpha};
  triple.z = mat::mul(F, triple.x, triple.y);

  const FactoredInteger two{Natural(2), {{Natural(2), 1}}};
  const FactoredInteger three{Natural(3), {{Natural(3), 1}}};
  checks["x_order"] = order_with_certified_exponent(F, triple.x, 2, two);
  checks["y_order"] = order_with_certified_exponent(F, triple.y, 3, three);
  checks["det_x"] = mat::det(F, triple.x) == F.one();
  checks["det_y"] = mat::det(F, triple.y) == F.one();
  checks["z_product"] = triple.z == displayed_z(F, mp.alpha);

  const FqElem eigen = F.inv(a11);
  const Poly linear({F.neg(eigen), F.one()});
  checks["charpoly_z"] = mat::char_poly(F, triple.z) == poly::mul(F, linear, f);
  checks["eigen_distinct"] = poly::eval(F, f, eigen).code != 0;

  const bool order_ok = order_with_certified_exponent(F, triple.z, Q.Q, factored_Q);

  IrreducibilityReport report = irreducibility_verdict(F, triple, f);
  const auto& lattice = report.z_invariant_lattice;
  bool lattice_ok = lattice.size() == 4;
  for (const auto& w : lattice) lattice_ok = lattice_ok && stability_check(F, w, triple.z);
  if (lattice_ok) {
    std::vector<Vec> first11;
    for (std::size_t i = 0; i + 1 < kDim; ++i) {
      Vec v(kDim);
      v[i] = F.one();
      first11.push_back(std::move(v));
    }
    lattice_ok = lattice[2] == Subspace::span(F, kDim, std::move(first11));
  }
  checks["lattice"] = lattice_ok;
  checks["y_moves_W1"] = lattice.size() == 4 && !report.y_stable[1];
  checks["y_moves_U"] = lattice.size() == 4 && !report.y_stable[2];
  bool no_common = true;
  for (const auto& e : report.common_eigen) no_common = no_common && e.intersection_dim == 0;
  checks["no_common_eigenvector"] = no_common;

  GenerationVerdict verdict = generation_verdict(report, order_ok, q, std::move(checks));
  return {std::move(mp), std::move(triple), std::move(report), std::move(verdict)};
}

Certificate generate(const Natural& p, unsigned m, OmegaMode mode, FactorBudget budget) {
  const FieldSpec spec = canonical_field(p, m);
  const Natural q = spec.q();
  const QValue Q = compute_Q(q);
  const FactoredInteger group = factorize(power(q, kExtDegree) - 1, budget);
  const FactoredInteger factored_Q = factored_Q_from(group, Q.halved);
  const ExtElem omega = find_omega(spec, Q, group, mode);
  Derivation d = derive(spec, omega, Q, factored_Q, group);

  Certificate cert;
  cert.p = p;
  cert.m = m;
  cert.q = q;
  cert.h = spec.h();
  cert.g = spec.g();
  cert.Q = Q.Q;
  cert.Q_halved = Q.halved;
  cert.factored_Q = factored_Q;
  cert.omega = omega;
  cert.omega_mode = mode;
  cert.f = d.minpoly.f;
  cert.alpha = d.minpoly.alpha;
  cert.x = std::move(d.triple.x);
  cert.y = std::move(d.triple.y);
  cert.z = std::move(d.triple.z);
  cert.irreducibility = std::move(d.report);
  cert.generation = std::move(d.verdict);
  return cert;
}

}  // namespace sl12
