#pragma once

#include <cstddef>
#include <vector>

#include "sl12/arith.hpp"
#include "sl12/base_field.hpp"
#include "sl12/poly.hpp"

namespace sl12 {

/// Coordinates of a column vector of GF(q)^n.
using Vec = std::vector<FqElem>;

/// Dense square matrix over GF(q), row-major. Vectors are columns and the
/// matrix acts by left multiplication.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), entries_(n * n) {}
  /// Throws sl12::Error unless entries.size() == n * n.
  Mat(std::size_t n, std::vector<FqElem> entries);

  static Mat identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  /// 0-based.
  FqElem operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * n_ + col]; }
  FqElem& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * n_ + col]; }
  const std::vector<FqElem>& entries() const noexcept { return entries_; }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<FqElem> entries_;
};

/// A subspace of GF(q)^n stored by its reduced row-echelon basis, so two
/// Subspace values are equal iff they are the same subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of arbitrary vectors of length ambient_dim.
  static Subspace span(const BaseField& F, std::size_t ambient_dim, std::vector<Vec> vectors);
  /// Adopts rows that are already in reduced row-echelon form (pivot 1,
  /// zeros elsewhere in pivot columns, pivots strictly increasing, no zero
  /// rows). The check is purely structural; throws sl12::Error otherwise.
  static Subspace from_rref(std::size_t ambient_dim, std::vector<Vec> rows);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  bool contains(const BaseField& F, const Vec& v) const;
  /// Canonical subset test.
  bool is_subspace_of(const BaseField& F, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

Subspace intersect(const BaseField& F, const Subspace& a, const Subspace& b);
Subspace sum(const BaseField& F, const Subspace& a, const Subspace& b);

namespace mat {

Mat add(const BaseField& F, const Mat& a, const Mat& b);
Mat sub(const BaseField& F, const Mat& a, const Mat& b);
Mat scale(const BaseField& F, const Mat& a, FqElem c);
Mat mul(const BaseField& F, const Mat& a, const Mat& b);
Vec apply(const BaseField& F, const Mat& a, const Vec& v);
Mat pow(const BaseField& F, const Mat& a, const Natural& e);
/// a - c*I
Mat shift(const BaseField& F, const Mat& a, FqElem c);
/// f(a) by Horner's rule.
Mat eval_poly(const BaseField& F, const Poly& f, const Mat& a);

/// Gaussian elimination with row-swap sign tracking.
FqElem det(const BaseField& F, Mat a);
std::size_t rank(const BaseField& F, const Mat& a);
/// Null space {v : a v = 0}.
Subspace kernel(const BaseField& F, const Mat& a);
/// det(tI - a) via reduction to upper Hessenberg form.
Poly char_poly(const BaseField& F, const Mat& a);
/// Companion matrix of a monic polynomial; its characteristic polynomial is f.
Mat companion(const BaseField& F, const Poly& f);

}  // namespace mat
}  // namespace sl12
