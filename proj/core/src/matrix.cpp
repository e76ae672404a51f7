#include "sl12/matrix.hpp"

#include <string>
#include <utility>

#include "sl12/errors.hpp"

namespace sl12 {
namespace {

// Reduces `rows` (each of length ncols) to reduced row-echelon form in place,
// dropping zero rows. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(const BaseField& F, std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col].code == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    const FqElem inv = F.inv(rows[next][col]);
    for (auto& x : rows[next]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      const FqElem c = rows[r][col];
      if (c.code == 0) continue;
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[next][j]));
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].code != 0) return i;
  }
  return v.size();
}

void check_same_dim(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw Error("matrix dimension mismatch");
}

}  // namespace

Mat::Mat(std::size_t n, std::vector<FqElem> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw Error("Mat: expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
}

Mat Mat::identity(std::size_t n) {
  Mat out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = FqElem{1};
  return out;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim);
    v[i] = FqElem{1};
    s.basis_.push_back(std::move(v));
  }
  return s;
}

Subspace Subspace::span(const BaseField& F, std::size_t ambient_dim, std::vector<Vec> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error("Subspace::span: vector length mismatch");
  }
  rref(F, vectors, ambient_dim);
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::from_rref(std::size_t ambient_dim, std::vector<Vec> rows) {
  std::vector<std::size_t> pivots;
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) throw Error("Subspace: basis vector length mismatch");
    const std::size_t lead = leading_index(r);
    if (lead == ambient_dim) throw Error("Subspace: zero basis vector");
    if (r[lead].code != 1) throw Error("Subspace: pivot entry is not 1");
    if (!pivots.empty() && lead <= pivots.back()) throw Error("Subspace: pivots not strictly increasing");
    pivots.push_back(lead);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i != j && rows[j][pivots[i]].code != 0) throw Error("Subspace: pivot column not cleared");
    }
  }
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = std::move(rows);
  return s;
}

bool Subspace::contains(const BaseField& F, const Vec& v) const {
  if (v.size() != ambient_dim_) throw Error("Subspace::contains: vector length mismatch");
  Vec w = v;
  for (const auto& row : basis_) {
    const FqElem c = w[leading_index(row)];
    if (c.code == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) w[j] = F.sub(w[j], F.mul(c, row[j]));
  }
  return leading_index(w) == ambient_dim_;
}

bool Subspace::is_subspace_of(const BaseField& F, const Subspace& other) const {
  for (const auto& row : basis_) {
    if (!other.contains(F, row)) return false;
  }
  return true;
}

Subspace intersect(const BaseField& F, const Subspace& a, const Subspace& b) {
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; echelon rows
  // whose left half vanishes span the intersection in their right half.
  const std::size_t n = a.ambient_dim();
  if (b.ambient_dim() != n) throw Error("intersect: ambient dimension mismatch");
  std::vector<Vec> rows;
  for (const auto& u : a.basis()) {
    Vec r(u);
    r.insert(r.end(), u.begin(), u.end());
    rows.push_back(std::move(r));
  }
  for (const auto& w : b.basis()) {
    Vec r(w);
    r.resize(2 * n);
    rows.push_back(std::move(r));
  }
  const auto pivots = rref(F, rows, 2 * n);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] >= n) out.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(n), rows[i].end());
  }
  return Subspace::span(F, n, std::move(out));
}

Subspace sum(const BaseField& F, const Subspace& a, const Subspace& b) {
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(F, a.ambient_dim(), std::move(all));
}

namespace mat {

Mat add(const BaseField& F, const Mat& a, const Mat& b) {
  check_same_dim(a, b);
  Mat out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = F.add(a(i, j), b(i, j));
  }
  return out;
}

Mat sub(const BaseField& F, const Mat& a, const Mat& b) {
  check_same_dim(a, b);
  Mat out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = F.sub(a(i, j), b(i, j));
  }
  return out;
}

Mat scale(const BaseField& F, const Mat& a, FqElem c) {
  Mat out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = F.mul(a(i, j), c);
  }
  return out;
}

Mat mul(const BaseField& F, const Mat& a, const Mat& b) {
  check_same_dim(a, b);
  const std::size_t n = a.dim();
  Mat out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const FqElem aik = a(i, k);
      if (aik.code == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const FqElem bkj = b(k, j);
        if (bkj.code != 0) out(i, j) = F.add(out(i, j), F.mul(aik, bkj));
      }
    }
  }
  return out;
}

Vec apply(const BaseField& F, const Mat& a, const Vec& v) {
  if (v.size() != a.dim()) throw Error("apply: vector length mismatch");
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    FqElem acc{};
    for (std::size_t j = 0; j < a.dim(); ++j) acc = F.add(acc, F.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Mat pow(const BaseField& F, const Mat& a, const Natural& e) {
  Mat result = Mat::identity(a.dim());
  if (e == 0) return result;
  const auto top = static_cast<unsigned>(boost::multiprecision::msb(e));
  for (unsigned i = top + 1; i-- > 0;) {
    result = mul(F, result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(F, result, a);
  }
  return result;
}

Mat shift(const BaseField& F, const Mat& a, FqElem c) {
  Mat out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out(i, i) = F.sub(out(i, i), c);
  return out;
}

Mat eval_poly(const BaseField& F, const Poly& f, const Mat& a) {
  Mat acc(a.dim());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = mul(F, acc, a);
    for (std::size_t d = 0; d < a.dim(); ++d) acc(d, d) = F.add(acc(d, d), c[i]);
  }
  return acc;
}

FqElem det(const BaseField& F, Mat a) {
  const std::size_t n = a.dim();
  FqElem result = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).code == 0) ++sel;
    if (sel == n) return F.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      result = F.neg(result);
    }
    const FqElem pivot = a(col, col);
    result = F.mul(result, pivot);
    const FqElem inv = F.inv(pivot);
    for (std::size_t r = col + 1; r < n; ++r) {
      const FqElem c = F.mul(a(r, col), inv);
      if (c.code == 0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) = F.sub(a(r, j), F.mul(c, a(col, j)));
    }
  }
  return result;
}

std::size_t rank(const BaseField& F, const Mat& a) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rows.emplace_back(a.entries().begin() + static_cast<std::ptrdiff_t>(i * a.dim()),
                      a.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * a.dim()));
  }
  return rref(F, rows, a.dim()).size();
}

Subspace kernel(const BaseField& F, const Mat& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.emplace_back(a.entries().begin() + static_cast<std::ptrdiff_t>(i * n),
                      a.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  const auto pivots = rref(F, rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = F.one();
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = F.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(F, n, std::move(basis));
}

Poly char_poly(const BaseField& F, const Mat& a) {
  const std::size_t n = a.dim();
  Mat h = a;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t sel = k + 1;
    while (sel < n && h(sel, k).code == 0) ++sel;
    if (sel == n) continue;
    if (sel != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, k + 1));
    }
    const FqElem inv = F.inv(h(k + 1, k));
    for (std::size_t r = k + 2; r < n; ++r) {
      const FqElem u = F.mul(h(r, k), inv);
      if (u.code == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = F.sub(h(r, j), F.mul(u, h(k + 1, j)));
      for (std::size_t i = 0; i < n; ++i) h(i, k + 1) = F.add(h(i, k + 1), F.mul(u, h(i, r)));
    }
  }

  // Expansion along the last column: chars[m] = det(tI - H[0..m, 0..m]).
  const Poly t = Poly::monomial(F.one(), 1);
  std::vector<Poly> chars{Poly::constant(F.one())};
  for (std::size_t m = 0; m < n; ++m) {
    Poly next = poly::mul(F, poly::sub(F, t, Poly::constant(h(m, m))), chars[m]);
    FqElem sub_product = F.one();
    for (std::size_t i = m; i-- > 0;) {
      sub_product = F.mul(sub_product, h(i + 1, i));
      const FqElem coef = F.mul(h(i, m), sub_product);
      if (coef.code != 0) next = poly::sub(F, next, poly::scale(F, chars[i], coef));
    }
    chars.push_back(std::move(next));
  }
  return chars[n];
}

Mat companion(const BaseField& F, const Poly& f) {
  if (!f.is_monic()) throw Error("companion: polynomial must be monic");
  const std::size_t n = f.degree();
  Mat c(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = F.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = F.neg(f[i]);
  return c;
}

}  // namespace mat
}  // namespace sl12
