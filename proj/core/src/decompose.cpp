#include "esing/decompose.hpp"

namespace esing {

PowerSeries1 solve_psi(const PolyJet& jet, unsigned W) {
    if (!jet.coeff(0, 2).is_zero() || !jet.coeff(1, 2).is_zero() || jet.coeff(0, 3).is_zero()) {
        throw PreconditionError(
            "decomposition hypotheses violated: need zero (0,2) and (1,2) "
            "coefficients and a nonzero (0,3) coefficient");
    }
    const PolyJet g = jet.d2().d2();  // d2^2 phi, exact polynomial
    const Rational pivot = g.coeff(0, 1);  // equals 6 * phi(0,3) coefficient

    PowerSeries1 psi(W);
    for (unsigned k = 2; k <= W; ++k) {
        const PowerSeries1 residual = jet_eval_series(g, psi, W);
        psi.set_coeff(k, -residual.coeff(k) / pivot);
    }
    const PowerSeries1 residual = jet_eval_series(g, psi, W);
    if (!residual.is_zero()) {
        throw InternalError("psi does not annihilate d2^2 phi within the working order");
    }
    return psi;
}

std::pair<PolyJet, PowerSeries1> divide_x2_minus_psi(const PolyJet& jet,
                                                     const PowerSeries1& psi) {
    const unsigned W = jet.order();
    if (W == 0) throw PreconditionError("cannot divide an order-0 jet by x2 - psi");
    const PowerSeries1 psi_w = psi.truncated(W);

    // Descending recurrence on x2-rows: row_j = q_{j-1} - psi*q_j, so
    // q_{j-1} = row_j + psi*q_j; the left-over row 0 term is the remainder.
    const unsigned jmax = std::max(jet.max_x2_degree(), 1u);
    PolyJet quotient(W - 1);
    PowerSeries1 carry(W);  // q_j while descending
    for (unsigned j = jmax; j-- > 0;) {
        PowerSeries1 row(W, jet.x2_row(j + 1, W + 1));
        PowerSeries1 q = row + psi_w * carry;
        for (unsigned i = 0; i + j <= W - 1; ++i) {
            quotient.set_coeff(i, j, q.coeff(i));
        }
        carry = q;
    }
    PowerSeries1 remainder =
        PowerSeries1(W, jet.x2_row(0, W + 1)) + psi_w * carry;
    return {std::move(quotient), std::move(remainder)};
}

Decomposition decompose(const PolyJet& jet, unsigned W) {
    if (W < 3) throw PreconditionError("decomposition needs working order >= 3");
    if (W < jet.order()) {
        throw PreconditionError("working order below the jet order would truncate the germ");
    }
    PowerSeries1 psi = solve_psi(jet, W);
    const PolyJet jet_w = jet.order() == W ? jet : jet.lifted(W);

    PowerSeries1 b0 = jet_eval_series(jet_w, psi, W);
    PowerSeries1 b1 = jet_eval_series(jet_w.d2(), psi, W);

    // R = phi - b0 - b1*(x2 - psi) = phi - (b0 - psi*b1) - b1*x2, then
    // three exact divisions by (x2 - psi).
    PolyJet r = jet_w - jet_from_series(b0 - psi * b1, W) -
                jet_from_series(b1, W).times_monomial(0, 1).truncated(W);

    PolyJet quotient = std::move(r);
    for (int step = 0; step < 3; ++step) {
        auto [q, rem] = divide_x2_minus_psi(quotient, psi);
        if (!rem.is_zero()) {
            throw InternalError("division by (x2 - psi) left a remainder in the retained range");
        }
        quotient = std::move(q);
    }

    Decomposition d{std::move(psi), std::move(b0), std::move(b1), std::move(quotient),
                    std::nullopt,   std::nullopt,  Rational(0)};
    d.ord_b0 = vanishing_order(d.b0);
    d.ord_b1 = vanishing_order(d.b1);
    d.B_at_origin = d.B.coeff(0, 0);
    if (d.B_at_origin != jet.coeff(0, 3)) {
        throw InternalError("B(0,0) must equal the (0,3) jet coefficient");
    }
    return d;
}

PolyJet Decomposition::reconstruct(unsigned W) const {
    PolyJet x2_minus_psi = -jet_from_series(psi.truncated(W), W);
    x2_minus_psi.set_coeff(0, 1, Rational(1));
    PolyJet acc = jet_from_series(b0.truncated(W), W);
    acc = acc + jet_from_series(b1.truncated(W), W) * x2_minus_psi;
    PolyJet cube = x2_minus_psi * x2_minus_psi * x2_minus_psi;
    acc = acc + B.lifted(std::max(W, B.order())).truncated(W) * cube;
    return acc;
}

}  // namespace esing
