#pragma once

#include <optional>

#include "esing/poly_jet.hpp"
#include "esing/power_series.hpp"

namespace esing {

/// Split phi = b0(x1) + b1(x1)(x2 - psi(x1)) + B(x1,x2)(x2 - psi(x1))^3
/// with d2^2 phi(x1, psi(x1)) = 0. Series are exact to order W; B is exact
/// to total degree W-3. ord fields are nullopt ("infinite") when every
/// retained coefficient vanishes.
struct Decomposition {
    PowerSeries1 psi;
    PowerSeries1 b0;
    PowerSeries1 b1;
    PolyJet B;
    std::optional<unsigned> ord_b0;
    std::optional<unsigned> ord_b1;
    Rational B_at_origin;

    /// b0 + b1*(x2-psi) + B*(x2-psi)^3 rebuilt as a jet of order W. Equals
    /// the source jet coefficient-for-coefficient through total degree W.
    PolyJet reconstruct(unsigned W) const;
};

/// Unique series with d2^2 phi(x1, psi(x1)) = 0 mod x1^(W+1) and
/// psi(0) = psi'(0) = 0, solved coefficient by coefficient; the pivot of
/// each linear step is d2^3 phi(0,0). Requires the (0,2) and (1,2) jet
/// coefficients to vanish and the (0,3) coefficient to be nonzero, else
/// throws PreconditionError.
PowerSeries1 solve_psi(const PolyJet& jet, unsigned W);

/// Computes the full decomposition at working order W. b0 and b1 are the
/// jet and its x2-derivative evaluated along psi; B falls out of three
/// exact divisions by (x2 - psi), each checked remainder-free.
Decomposition decompose(const PolyJet& jet, unsigned W);

/// Quotient and remainder of a jet divided once by (x2 - psi(x1)):
/// jet = quotient*(x2 - psi) + remainder(x1), quotient order one lower.
std::pair<PolyJet, PowerSeries1> divide_x2_minus_psi(const PolyJet& jet,
                                                     const PowerSeries1& psi);

}  // namespace esing
