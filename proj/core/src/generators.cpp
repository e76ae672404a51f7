#include "sl12/generators.hpp"

#include "sl12/errors.hpp"

namespace sl12 {
namespace {

// Entries are addressed 1-based to line up with the printed matrices.
class Builder {
 public:
  Builder() : m_(kDim) {}
  void set(std::size_t row, std::size_t col, FqElem v) { m_(row - 1, col - 1) = v; }
  Mat take() { return std::move(m_); }

 private:
  Mat m_;
};

}  // namespace

Mat build_y(const BaseField& F) {
  Builder y;
  const FqElem one = F.one();
  // Row i has its 1 in the column of the basis vector mapped onto v_i.
  constexpr std::size_t cols[kDim] = {3, 1, 2, 6, 4, 5, 9, 7, 8, 12, 10, 11};
  for (std::size_t row = 1; row <= kDim; ++row) y.set(row, cols[row - 1], one);
  return y.take();
}

Mat assemble_x(const BaseField& F, const AlphaVector& alpha) {
  const FqElem m1 = F.neg(F.one());
  const FqElem a11 = alpha.at(11);
  if (a11.code == 0) throw ConsistencyError("x_order", "alpha_11 is zero");
  const FqElem a11_inv = F.inv(a11);
  auto a = [&](std::size_t i) { return alpha.at(i); };
  auto ai = [&](std::size_t i) { return F.mul(alpha.at(i), a11_inv); };

  Builder x;
  x.set(1, 1, m1);   x.set(1, 10, ai(6));   x.set(1, 12, a(6));
  x.set(2, 2, m1);   x.set(2, 10, ai(5));   x.set(2, 12, a(5));
  x.set(3, 6, m1);   x.set(3, 10, ai(4));   x.set(3, 12, a(7));
  x.set(4, 8, m1);   x.set(4, 10, ai(3));   x.set(4, 12, a(9));
  x.set(5, 5, m1);   x.set(5, 10, ai(8));   x.set(5, 12, a(8));
  x.set(6, 3, m1);   x.set(6, 10, ai(7));   x.set(6, 12, a(4));
  x.set(7, 10, ai(1)); x.set(7, 11, m1);    x.set(7, 12, a(10));
  x.set(8, 4, m1);   x.set(8, 10, ai(9));   x.set(8, 12, a(3));
  x.set(9, 9, m1);   x.set(9, 10, ai(2));   x.set(9, 12, a(2));
  x.set(10, 12, a11);
  x.set(11, 7, m1);  x.set(11, 10, ai(10)); x.set(11, 12, a(1));
  x.set(12, 10, a11_inv);
  return x.take();
}

Mat build_x(const BaseField& F, const AlphaVector& alpha) {
  Mat out = assemble_x(F, alpha);
  const Mat id = Mat::identity(kDim);
  if (mat::mul(F, out, out) != id || out == id) {
    throw ConsistencyError("x_order", "x^2 != I or x = I for this alpha");
  }
  if (mat::det(F, out) != F.one()) throw ConsistencyError("det_x", "det(x) != 1 for this alpha");
  return out;
}

Mat displayed_z(const BaseField& F, const AlphaVector& alpha) {
  const FqElem m1 = F.neg(F.one());
  const FqElem a11 = alpha.at(11);
  if (a11.code == 0) throw ConsistencyError("z_product", "alpha_11 is zero");
  const FqElem a11_inv = F.inv(a11);
  auto a = [&](std::size_t i) { return alpha.at(i); };
  auto ai = [&](std::size_t i) { return F.mul(alpha.at(i), a11_inv); };

  Builder z;
  z.set(1, 3, m1);   z.set(1, 11, a(6));   z.set(1, 12, ai(6));
  z.set(2, 1, m1);   z.set(2, 11, a(5));   z.set(2, 12, ai(5));
  z.set(3, 5, m1);   z.set(3, 11, a(7));   z.set(3, 12, ai(4));
  z.set(4, 7, m1);   z.set(4, 11, a(9));   z.set(4, 12, ai(3));
  z.set(5, 4, m1);   z.set(5, 11, a(8));   z.set(5, 12, ai(8));
  z.set(6, 2, m1);   z.set(6, 11, a(4));   z.set(6, 12, ai(7));
  z.set(7, 10, m1);  z.set(7, 11, a(10));  z.set(7, 12, ai(1));
  z.set(8, 6, m1);   z.set(8, 11, a(3));   z.set(8, 12, ai(9));
  z.set(9, 8, m1);   z.set(9, 11, a(2));   z.set(9, 12, ai(2));
  z.set(10, 11, a11);
  z.set(11, 9, m1);  z.set(11, 11, a(1));  z.set(11, 12, ai(10));
  z.set(12, 12, a11_inv);
  return z.take();
}

Mat build_z(const BaseField& F, const Mat& x, const Mat& y, const AlphaVector& alpha) {
  Mat z = mat::mul(F, x, y);
  if (z != displayed_z(F, alpha)) {
    throw ConsistencyError("z_product", "x*y differs from the closed form of z");
  }
  return z;
}

GeneratorTriple build_generators(const BaseField& F, const AlphaVector& alpha) {
  Mat x = build_x(F, alpha);
  Mat y = build_y(F);
  Mat z = build_z(F, x, y, alpha);
  return {std::move(x), std::move(y), std::move(z), alpha};
}

bool order_with_certified_exponent(const BaseField& F, const Mat& a, const Natural& Q,
                                   const FactoredInteger& factored_Q) {
  if (factored_Q.value != Q) throw Error("order_with_certified_exponent: factorization does not match Q");
  const Mat id = Mat::identity(a.dim());
  if (mat::pow(F, a, Q) != id) return false;
  for (const auto& f : factored_Q.factors) {
    if (mat::pow(F, a, Q / f.prime) == id) return false;
  }
  return true;
}

}  // namespace sl12
