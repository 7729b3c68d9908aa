#include "esing/verify.hpp"

#include <cmath>
#include <random>

namespace esing {

namespace {

double eval_series(const PowerSeries1& s, double x, unsigned from = 0) {
    // Horner on coefficients from `from` upward (series divided by x1^from).
    double acc = 0;
    for (unsigned k = s.order() + 1; k-- > from;) {
        acc = acc * x + s.coeff(k).to_double();
    }
    return acc;
}

double signed_root(double x, int n) {
    return std::copysign(std::pow(std::abs(x), 1.0 / n), x);
}

Vec2 eval_map(const PolyMap2& map, Vec2 p) {
    return {map.comp1().eval(p[0], p[1]), map.comp2().eval(p[0], p[1])};
}

}  // namespace

std::optional<Vec2> NormalFormContext::map_point(Vec2 u) const {
    const double x1 = u[0];
    const double x2 = u[1];
    switch (classification.verdict) {
        case Verdict::E6: {
            const double psi = eval_series(decomposition.psi, x1);
            const double d = x2 - psi;
            const double b0t = eval_series(decomposition.b0, x1, 4);
            const double b1t = eval_series(decomposition.b1, x1, 4);
            const double radicand = b0t + d * b1t;
            if (radicand == 0) return std::nullopt;
            const double y1 = x1 * std::pow(std::abs(radicand), 0.25);
            const double y2 = d * std::cbrt(decomposition.B.eval(x1, x2));
            return Vec2{y1, y2};
        }
        case Verdict::E7: {
            const double bt = e7_cube_unit->eval(x1, x2);
            const double b1t = e7_line_unit->eval(x1, x2);
            const double cb = std::cbrt(bt);
            const double z2 = x2 * cb;
            const double z1 = x1 * std::cbrt(b1t / cb);
            return Vec2{z1, z2};
        }
        case Verdict::E8: {
            const double psi = eval_series(decomposition.psi, x1);
            const double d = x2 - psi;
            const double b0t = eval_series(decomposition.b0, x1, 5);
            const double b1t = eval_series(decomposition.b1, x1, 5);
            const double y1 = x1 * signed_root(b0t + d * b1t, 5);
            const double y2 = std::cbrt(decomposition.B.eval(x1, x2)) * d;
            return Vec2{y1, y2};
        }
        default:
            throw PreconditionError("normal-form map needs an E-type verdict");
    }
}

double NormalFormContext::normal_form_value(Vec2 y) const {
    const double y1 = y[0];
    const double y2 = y[1];
    switch (classification.verdict) {
        case Verdict::E6:
            return classification.sign * y1 * y1 * y1 * y1 + y2 * y2 * y2;
        case Verdict::E7:
            return y2 * y1 * y1 * y1 + y2 * y2 * y2;
        case Verdict::E8:
            return y1 * y1 * y1 * y1 * y1 + y2 * y2 * y2;
        default:
            throw PreconditionError("normal form needs an E-type verdict");
    }
}

Vec2 NormalFormContext::chain_point(Vec2 u) const {
    Vec2 p = u;
    const auto& chain = certificate.transform_chain;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        p = eval_map(it->map, p);
    }
    return p;
}

double NormalFormContext::germ_value(Vec2 x) const {
    return original.eval(x[0], x[1]);
}

std::optional<double> NormalFormContext::jacobian_closed_form() const {
    switch (classification.verdict) {
        case Verdict::E6: {
            const double c0 = decomposition.b0.coeff(4).to_double();
            const double c = decomposition.B_at_origin.to_double();
            return std::pow(std::abs(c0), 0.25) * std::pow(std::abs(c), 1.0 / 3);
        }
        case Verdict::E8: {
            const double d0 = decomposition.b0.coeff(5).to_double();
            const double c = decomposition.B_at_origin.to_double();
            return std::pow(std::abs(d0), 0.2) * std::pow(std::abs(c), 1.0 / 3);
        }
        default:
            return std::nullopt;  // E7: checked numerically only
    }
}

NormalFormContext build_normal_form_context(const PolyJet& jet, unsigned series_order) {
    if (series_order < jet.order()) {
        throw PreconditionError("series order must be at least the jet order");
    }
    const PolyJet jet_w = jet.lifted(series_order);
    auto [cls, cert] = classify(jet_w);
    if (!cls.is_e_type()) {
        throw PreconditionError(std::string("verdict not E-type: cannot build normal-form map (") +
                                verdict_name(cls.verdict) + ": " + cls.reason + ")");
    }
    const PolyJet& rotated = *cert.normalized_jet;
    const unsigned W = series_order;

    if (cls.verdict == Verdict::E6) {
        auto [step, reduced] = reduce_e6(rotated);
        cert.transform_chain.push_back(step);
        Decomposition dec = decompose(reduced, W);
        if (vanishing_order(dec.b0) != std::optional<unsigned>(4)) {
            throw InternalError("reduced E6 jet must have b0 of vanishing order 4");
        }
        if (dec.ord_b1 && *dec.ord_b1 < 4) {
            throw InternalError("reduced E6 jet must have b1 of vanishing order >= 4");
        }
        cert.normalized_jet = reduced;
        return {cls,    std::move(cert), std::move(dec),   W, jet_w, std::move(reduced),
                std::nullopt, std::nullopt, std::nullopt};
    }

    if (cls.verdict == Verdict::E8) {
        auto [steps, reduced] = reduce_e8(rotated);
        for (auto& s : steps) cert.transform_chain.push_back(std::move(s));
        Decomposition dec = decompose(reduced, W);
        if (vanishing_order(dec.b0) != std::optional<unsigned>(5)) {
            throw InternalError("reduced E8 jet must have b0 of vanishing order 5");
        }
        if (dec.ord_b1 && *dec.ord_b1 < 5) {
            throw InternalError("reduced E8 jet must have b1 of vanishing order >= 5");
        }
        cert.normalized_jet = reduced;
        return {cls,    std::move(cert), std::move(dec),   W, jet_w, std::move(reduced),
                std::nullopt, std::nullopt, std::nullopt};
    }

    // E7: shears, then onto the zero branch; extract the two unit cofactors
    // of b~(x1,x2)*x2^3 + x2*x1^3*b1~(x1,x2) from the translated jet.
    auto [steps, sheared] = reduce_e7(rotated);
    for (auto& s : steps) cert.transform_chain.push_back(std::move(s));
    E7Preform pf = e7_preform(sheared);
    cert.transform_chain.push_back(pf.psi_step);
    ZeroBranchResult zb = zero_branch(pf.preform, W);
    cert.transform_chain.push_back(zb.step);

    PolyJet cube_unit = substitute(pf.preform.x2_shifted_down(3), zb.step.map);
    PolyJet line_rest = zb.jet - cube_unit.times_monomial(0, 3).truncated(W);
    PolyJet line_unit(W >= 4 ? W - 4 : 0);
    for (const auto& [key, c] : line_rest.terms()) {
        if (key.second == 0) {
            throw InternalError("zero-branch jet keeps pure x1 terms after removing the cube part");
        }
        if (key.first < 3) {
            throw InternalError("zero-branch cofactor is not divisible by x1^3");
        }
        line_unit.set_coeff(key.first - 3, key.second - 1, c);
    }
    const Rational c1 = pf.dec.b1.coeff(3);
    if (line_unit.coeff(0, 0) != c1) {
        throw InternalError("zero-branch cofactor must equal b1(0) at the origin");
    }
    cert.normalized_jet = zb.jet;
    return {cls,
            std::move(cert),
            std::move(pf.dec),
            W,
            jet_w,
            std::move(zb.jet),
            std::move(zb.w),
            std::move(cube_unit),
            std::move(line_unit)};
}

namespace {

double uniform01(std::mt19937_64& gen) {
    // Fully specified: 53 top bits of the engine output.
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<Vec2> unit_disk_points(unsigned n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Vec2> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const double a = 2 * uniform01(gen) - 1;
        const double b = 2 * uniform01(gen) - 1;
        if (a * a + b * b > 1) continue;
        // The maps carry axis factors x1^m; stay off the axes.
        if (std::abs(a) < 1e-6 || std::abs(b) < 1e-6) continue;
        pts.push_back({a, b});
    }
    return pts;
}

double jacobian_fd(const NormalFormContext& ctx) {
    const double h = 1e-6;
    auto at = [&ctx](double x1, double x2) {
        auto y = ctx.map_point({x1, x2});
        if (!y) throw InternalError("root map degenerate next to the origin");
        return *y;
    };
    const Vec2 xp = at(h, 0), xm = at(-h, 0), yp = at(0, h), ym = at(0, -h);
    const double d11 = (xp[0] - xm[0]) / (2 * h);
    const double d12 = (yp[0] - ym[0]) / (2 * h);
    const double d21 = (xp[1] - xm[1]) / (2 * h);
    const double d22 = (yp[1] - ym[1]) / (2 * h);
    return d11 * d22 - d12 * d21;
}

}  // namespace

VerifyReport verify_normal_form(const PolyJet& jet, unsigned series_order, double radius,
                                unsigned samples, std::uint64_t seed) {
    if (samples == 0) {
        throw PreconditionError("verification needs at least one sample");
    }
    if (!(radius > 0) || !std::isfinite(radius)) {
        throw PreconditionError("verification needs a positive finite radius");
    }
    const NormalFormContext ctx = build_normal_form_context(jet, series_order);

    VerifyReport rep;
    rep.verdict = ctx.classification.verdict;
    rep.samples = samples;
    rep.radius = radius;
    rep.seed = seed;
    rep.series_order = series_order;

    const auto pts = unit_disk_points(samples, seed);
    auto max_residual_at = [&](double r) {
        double worst = 0;
        for (const auto& pt : pts) {
            const Vec2 u{r * pt[0], r * pt[1]};
            const auto y = ctx.map_point(u);
            if (!y) {
                ++rep.skipped_samples;
                continue;
            }
            const double res =
                std::abs(ctx.germ_value(ctx.chain_point(u)) - ctx.normal_form_value(*y));
            if (!std::isfinite(res)) {
                throw InternalError("non-finite residual during verification");
            }
            worst = std::max(worst, res);
        }
        return worst;
    };
    rep.max_residual = max_residual_at(radius);
    rep.max_residual_half = max_residual_at(radius / 2);

    if (rep.max_residual_half > 0 && rep.max_residual > 0) {
        rep.residual_order_estimate = std::log2(rep.max_residual / rep.max_residual_half);
    } else {
        rep.residual_order_estimate = 0;
    }
    const bool noise_level = rep.max_residual < 1e-13 && rep.max_residual_half < 1e-13;
    rep.pass = noise_level || rep.residual_order_estimate >= series_order + 0.5;

    rep.jacobian_numeric = jacobian_fd(ctx);
    rep.jacobian_closed_form = ctx.jacobian_closed_form();
    if (rep.jacobian_closed_form) {
        rep.jacobian_ok = std::abs(std::abs(rep.jacobian_numeric) - *rep.jacobian_closed_form) <=
                          1e-4 * *rep.jacobian_closed_form;
    } else {
        rep.jacobian_ok = std::abs(rep.jacobian_numeric) > 1e-8;
    }
    return rep;
}

bool gl2_invariance_fuzz(const PolyJet& jet, unsigned trials, std::uint64_t seed) {
    const Classification base = classify(jet).first;
    std::mt19937_64 gen(seed);
    auto entry = [&gen]() {
        return Rational(static_cast<long long>(gen() % 7) - 3);
    };
    for (unsigned t = 0; t < trials; ++t) {
        std::array<Rational, 4> m;
        do {
            m = {entry(), entry(), entry(), entry()};
        } while ((m[0] * m[3] - m[1] * m[2]).is_zero());
        const PolyJet moved = substitute(jet, PolyMap2::linear(m, jet.order()));
        if (!(classify(moved).first == base)) return false;
    }
    return true;
}

}  // namespace esing
