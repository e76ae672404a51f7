#pragma once

#include "sl12/arith.hpp"
#include "sl12/matrix.hpp"
#include "sl12/tower.hpp"

namespace sl12 {

inline constexpr std::size_t kDim = 12;

/// x, y and z = xy in SL_12(q) for a given alpha.
struct GeneratorTriple {
  Mat x;
  Mat y;
  Mat z;
  AlphaVector alpha;
};

/// The order-3 permutation matrix (v1 v2 v3)(v4 v5 v6)(v7 v8 v9)(v10 v11 v12).
Mat build_y(const BaseField& F);

/// x exactly as printed, without validation. Throws ConsistencyError("x_order")
/// if alpha_11 = 0.
Mat assemble_x(const BaseField& F, const AlphaVector& alpha);

/// The involution x. Verifies x^2 = I, x != I and det(x) = 1, throwing
/// ConsistencyError("x_order" / "det_x") otherwise.
Mat build_x(const BaseField& F, const AlphaVector& alpha);

/// Entry-for-entry form of z = xy as a closed expression in alpha.
Mat displayed_z(const BaseField& F, const AlphaVector& alpha);

/// x * y, checked against displayed_z (ConsistencyError("z_product")).
Mat build_z(const BaseField& F, const Mat& x, const Mat& y, const AlphaVector& alpha);

GeneratorTriple build_generators(const BaseField& F, const AlphaVector& alpha);

/// True iff a^Q = I and a^(Q/r) != I for every prime r | Q.
bool order_with_certified_exponent(const BaseField& F, const Mat& a, const Natural& Q,
                                   const FactoredInteger& factored_Q);

}  // namespace sl12
