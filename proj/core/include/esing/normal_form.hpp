#pragma once

#include <utility>
#include <vector>

#include "esing/decompose.hpp"
#include "esing/poly_jet.hpp"
#include "esing/power_series.hpp"

namespace esing {

/// Shear y1 = x1 + t*x2 with t chosen to kill the x1^3*x2 coefficient of
/// the quartic part. Input must be rotated (cubic part c*x2^3) with a
/// nonzero x1^4 coefficient. The x1^4 coefficient and the whole cubic part
/// are untouched.
std::pair<TransformStep, PolyJet> reduce_e6(const PolyJet& rotated);

/// Two steps on a rotated jet whose quartic part has x2 as a simple factor
/// (x1^4 coefficient zero, x1^3*x2 coefficient nonzero): first the
/// quadratic shear x2 <- x2 - s*x1^2 killing the pure x1^5 coefficient,
/// then the linear shear x1 <- x1 - u*x2 killing the x1^2*x2^2 coefficient.
std::pair<std::vector<TransformStep>, PolyJet> reduce_e7(const PolyJet& rotated);

/// Two steps on a rotated jet whose quartic part is divisible by x2^2 and
/// whose pure x1^5 coefficient is nonzero: the quadratic shear
/// x2 <- x2 - t*x1^2 killing the x1^2*x2^2 coefficient (it cannot touch the
/// x1^5 coefficient), then the linear shear x1 <- x1 - u*x2 killing x1^4*x2.
std::pair<std::vector<TransformStep>, PolyJet> reduce_e8(const PolyJet& rotated);

/// Result of the branch translation x2 <- x2 + x1^3*w(x1).
struct ZeroBranchResult {
    PowerSeries1 w;      // solved to order W-6 (order 0 when W < 7)
    TransformStep step;  // translate_branch with the map above
    PolyJet jet;         // translated jet: pure x1 coefficients vanish through W
};

/// Zero branch for a jet in the pre-form
///   b(x1,x2)*x2^3 + x2*x1^3*b1(x1) + x1^6*b0(x1),  b(0,0) != 0, b1(0) != 0:
/// solves b(x1, x1^3 w) w^3 x1^3 + w b1(x1) + b0(x1) = 0 coefficient by
/// coefficient (pivot b1(0), w(0) = -b0(0)/b1(0)) and translates the jet
/// onto the branch. Throws PreconditionError when b1(0) = 0 and
/// InternalError when the jet is not in pre-form.
ZeroBranchResult zero_branch(const PolyJet& preform, unsigned W);

/// Bridge from a reduced E7 jet to the zero-branch pre-form: decompose,
/// then translate x2 <- x2 + psi(x1). Validates the pre-form shape (pure
/// part divisible by x1^6, x2 row by x1^3, empty x2^2 row).
struct E7Preform {
    Decomposition dec;
    TransformStep psi_step;  // translate_branch with x2 <- x2 + psi
    PolyJet preform;
};
E7Preform e7_preform(const PolyJet& reduced_e7_jet);

}  // namespace esing
