#include "esing/normal_form.hpp"

namespace esing {

namespace {

void require_rotated(const PolyJet& jet) {
    if (jet.coeff(0, 3).is_zero() || !jet.coeff(3, 0).is_zero() ||
        !jet.coeff(2, 1).is_zero() || !jet.coeff(1, 2).is_zero()) {
        throw PreconditionError("reduction expects a rotated jet with cubic part c*x2^3");
    }
}

/// x1 <- x1 - u*x2, x2 unchanged.
PolyMap2 shear_x1(const Rational& u, unsigned order) {
    return PolyMap2::linear({Rational(1), -u, Rational(0), Rational(1)}, order);
}

/// x2 <- x2 - t*x1^2, x1 unchanged.
PolyMap2 quadratic_shear_x2(const Rational& t, unsigned order) {
    PolyJet c1(order);
    c1.set_coeff(1, 0, Rational(1));
    PolyJet c2(order);
    c2.set_coeff(0, 1, Rational(1));
    c2.set_coeff(2, 0, -t);
    return PolyMap2(std::move(c1), std::move(c2));
}

/// x2 <- x2 + x1^3 * w(x1), x1 unchanged.
PolyMap2 branch_translation(const PowerSeries1& w, unsigned order) {
    PolyJet c1(order);
    c1.set_coeff(1, 0, Rational(1));
    PolyJet c2(order);
    c2.set_coeff(0, 1, Rational(1));
    for (unsigned k = 0; k <= w.order() && k + 3 <= order; ++k) {
        c2.add_coeff(k + 3, 0, w.coeff(k));
    }
    return PolyMap2(std::move(c1), std::move(c2));
}

}  // namespace

std::pair<TransformStep, PolyJet> reduce_e6(const PolyJet& rotated) {
    require_rotated(rotated);
    const Rational c0 = rotated.coeff(4, 0);
    if (c0.is_zero()) {
        throw PreconditionError("E6 reduction requires Res(p3,p4) != 0");
    }
    const Rational t = rotated.coeff(3, 1) / (Rational(4) * c0);
    TransformStep step{StepKind::shear_E6, shear_x1(t, rotated.order()), {{"t", t}}};
    PolyJet out = substitute(rotated, step.map);
    if (!out.coeff(3, 1).is_zero() || out.coeff(4, 0) != c0) {
        throw InternalError("E6 shear failed to normalize the quartic part");
    }
    return {std::move(step), std::move(out)};
}

std::pair<std::vector<TransformStep>, PolyJet> reduce_e7(const PolyJet& rotated) {
    require_rotated(rotated);
    if (!rotated.coeff(4, 0).is_zero()) {
        throw PreconditionError("E7 reduction requires a vanishing x1^4 coefficient");
    }
    const Rational c1 = rotated.coeff(3, 1);
    if (c1.is_zero()) {
        throw PreconditionError("E7 reduction requires simple common factor");
    }
    std::vector<TransformStep> steps;

    const Rational s = rotated.coeff(5, 0) / c1;
    steps.push_back({StepKind::qshear_E7, quadratic_shear_x2(s, rotated.order()), {{"s", s}}});
    PolyJet mid = substitute(rotated, steps.back().map);
    if (!mid.coeff(5, 0).is_zero()) {
        throw InternalError("E7 quadratic shear failed to kill the pure x1^5 coefficient");
    }

    const Rational u = mid.coeff(2, 2) / (Rational(3) * c1);
    steps.push_back({StepKind::shear_E7b, shear_x1(u, mid.order()), {{"u", u}}});
    PolyJet out = substitute(mid, steps.back().map);
    if (!out.coeff(2, 2).is_zero() || out.coeff(3, 1) != c1) {
        throw InternalError("E7 linear shear failed to normalize the quartic part");
    }
    return {std::move(steps), std::move(out)};
}

std::pair<std::vector<TransformStep>, PolyJet> reduce_e8(const PolyJet& rotated) {
    require_rotated(rotated);
    if (!rotated.coeff(4, 0).is_zero() || !rotated.coeff(3, 1).is_zero()) {
        throw PreconditionError("E8 reduction requires x2^2 dividing the quartic part");
    }
    const Rational d0 = rotated.coeff(5, 0);
    if (d0.is_zero()) {
        throw PreconditionError("not E8: Res(p3,p5) = 0");
    }
    std::vector<TransformStep> steps;

    // The quadratic shear parameter carries the cube coefficient: the cubic
    // part c*x2^3 feeds -3*c*t into the (2,2) slot, so t = c2/(3c).
    const Rational c = rotated.coeff(0, 3);
    const Rational t = rotated.coeff(2, 2) / (Rational(3) * c);
    steps.push_back({StepKind::qshear_E8, quadratic_shear_x2(t, rotated.order()), {{"t", t}}});
    PolyJet mid = substitute(rotated, steps.back().map);
    if (!mid.coeff(2, 2).is_zero() || mid.coeff(5, 0) != d0) {
        throw InternalError("E8 quadratic shear failed (x1^2*x2^2 or x1^5 coefficient)");
    }

    const Rational u = mid.coeff(4, 1) / (Rational(5) * d0);
    steps.push_back({StepKind::shear_E8b, shear_x1(u, mid.order()), {{"u", u}}});
    PolyJet out = substitute(mid, steps.back().map);
    if (!out.coeff(4, 1).is_zero() || out.coeff(5, 0) != d0) {
        throw InternalError("E8 linear shear failed (x1^4*x2 or x1^5 coefficient)");
    }
    return {std::move(steps), std::move(out)};
}

ZeroBranchResult zero_branch(const PolyJet& preform, unsigned W) {
    if (W < preform.order()) {
        throw PreconditionError("working order below the jet order would truncate the germ");
    }
    const PolyJet jet = preform.order() == W ? preform : preform.lifted(W);

    // Pre-form shape: pure row = x1^6*b0, x2 row = x1^3*b1, no x2^2 row.
    for (unsigned i = 0; i < 6 && i <= W; ++i) {
        if (!jet.coeff(i, 0).is_zero()) {
            throw InternalError("pre-form pure x1 part must be divisible by x1^6");
        }
    }
    for (unsigned i = 0; i < 3; ++i) {
        if (!jet.coeff(i, 1).is_zero()) {
            throw InternalError("pre-form x2 row must be divisible by x1^3");
        }
    }
    for (unsigned i = 0; i + 2 <= W; ++i) {
        if (!jet.coeff(i, 2).is_zero()) {
            throw InternalError("pre-form admits no x2^2 terms");
        }
    }
    if (jet.coeff(0, 3).is_zero()) {
        throw InternalError("pre-form cube factor must not vanish at the origin");
    }
    const Rational b1_0 = jet.coeff(3, 1);
    if (b1_0.is_zero()) {
        throw PreconditionError("zero branch requires b1(0) != 0");
    }
    const Rational b0_0 = W >= 6 ? jet.coeff(6, 0) : Rational(0);

    // Solve the pure row to zero order by order. The unknown w_k first
    // appears at x1^(6+k) through the x2*x1^3*b1 term with pivot b1(0).
    const unsigned K = W >= 7 ? W - 6 : 0;
    PowerSeries1 w(K);
    w.set_coeff(0, -b0_0 / b1_0);
    for (unsigned k = 1; k <= K; ++k) {
        const PowerSeries1 branch = w.lifted(W).shifted_up(3);  // x1^3 * w(x1)
        const PowerSeries1 residual = jet_eval_series(jet, branch, W);
        w.set_coeff(k, -residual.coeff(6 + k) / b1_0);
    }

    TransformStep step{StepKind::translate_branch, branch_translation(w, W),
                       {{"w0", w.coeff(0)}}};
    PolyJet out = substitute(jet, step.map);
    const PowerSeries1 pure(W, out.x2_row(0, W + 1));
    if (!pure.is_zero()) {
        throw InternalError("branch translation left pure x1 terms in the retained range");
    }
    if (out.coeff(3, 1) != b1_0) {
        throw InternalError("branch translation must preserve the x1^3*x2 coefficient");
    }
    return {std::move(w), std::move(step), std::move(out)};
}

E7Preform e7_preform(const PolyJet& reduced) {
    const unsigned W = reduced.order();
    Decomposition dec = decompose(reduced, W);

    PolyJet c1_jet(W);
    c1_jet.set_coeff(1, 0, Rational(1));
    PolyJet c2_jet = jet_from_series(dec.psi, W);
    c2_jet.set_coeff(0, 1, Rational(1));
    TransformStep psi_step{StepKind::translate_branch, PolyMap2(std::move(c1_jet), std::move(c2_jet)),
                           {{"psi2", dec.psi.order() >= 2 ? dec.psi.coeff(2) : Rational(0)}}};
    PolyJet preform = substitute(reduced, psi_step.map);

    for (unsigned i = 0; i < 6 && i <= W; ++i) {
        if (!preform.coeff(i, 0).is_zero()) {
            throw InternalError("reduced E7 jet has a pure x1 coefficient below degree 6");
        }
    }
    for (unsigned i = 0; i < 3; ++i) {
        if (!preform.coeff(i, 1).is_zero()) {
            throw InternalError("reduced E7 jet has an x2 row not divisible by x1^3");
        }
    }
    for (unsigned i = 0; i + 2 <= W; ++i) {
        if (!preform.coeff(i, 2).is_zero()) {
            throw InternalError("psi translation left x2^2 terms");
        }
    }
    return {std::move(dec), std::move(psi_step), std::move(preform)};
}

}  // namespace esing
