#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "esing/classify.hpp"
#include "esing/decompose.hpp"
#include "esing/normal_form.hpp"

namespace esing {

using Vec2 = std::array<double, 2>;

/// Outcome of the statistical normal-form verification. pass only reflects
/// the residual criterion: order estimate >= series_order + 0.5, or both
/// residual maxima at floating-point noise (< 1e-13). The Jacobian check is
/// reported separately.
struct VerifyReport {
    Verdict verdict = Verdict::NotEType;
    unsigned samples = 0;
    double radius = 0;
    std::uint64_t seed = 0;
    unsigned series_order = 0;
    double max_residual = 0;
    double max_residual_half = 0;
    double residual_order_estimate = 0;
    unsigned skipped_samples = 0;
    double jacobian_numeric = 0;
    std::optional<double> jacobian_closed_form;  // E6 and E8 carry closed forms
    bool jacobian_ok = false;
    bool pass = false;
};

/// Everything needed to evaluate the root-extraction map of a classified
/// germ: classification + certificate whose transform chain runs through
/// every reduction step, the series decomposition of the reduced jet, and
/// (for E7) the two unit cofactors of the zero-branch form.
struct NormalFormContext {
    Classification classification;
    Certificate certificate;  // transform_chain extended past classify
    Decomposition decomposition;
    unsigned series_order;
    PolyJet original;  // the germ, lifted to the series order
    PolyJet reduced;   // after the recorded shears (E7: after branch translation)
    std::optional<PowerSeries1> branch_w;  // E7 only
    std::optional<PolyJet> e7_cube_unit;   // E7: B~(x1,x2), cube cofactor
    std::optional<PolyJet> e7_line_unit;   // E7: B1~(x1,x2), x2*x1^3 cofactor

    /// Root-extraction map at a reduced-coordinates point; nullopt when the
    /// E6 fourth root's radicand is exactly zero there (sample skipped).
    std::optional<Vec2> map_point(Vec2 u) const;
    /// Value of the verdict's normal form (with the E6 sign) at y.
    double normal_form_value(Vec2 y) const;
    /// Original coordinates of a reduced point, through the transform chain.
    Vec2 chain_point(Vec2 u) const;
    /// The input germ evaluated in original coordinates.
    double germ_value(Vec2 x) const;
    /// |J(0,0)| of the root-extraction map where a closed form exists.
    std::optional<double> jacobian_closed_form() const;
};

/// Runs classify + the type-specific reduction pipeline and assembles the
/// evaluation context. Throws PreconditionError unless the verdict is
/// E6/E7/E8 and series_order >= jet.order().
NormalFormContext build_normal_form_context(const PolyJet& jet, unsigned series_order);

/// Root-extraction map of a prepared context, as a free function.
inline std::optional<Vec2> normal_form_map(const NormalFormContext& ctx, Vec2 u) {
    return ctx.map_point(u);
}

/// Draws `samples` pseudo-random points in the disk (deterministic in
/// seed, axes avoided), compares germ against normal form at radius and
/// radius/2 with the same directions, and estimates the convergence order
/// as log2 of the residual ratio. Includes the finite-difference Jacobian
/// check at the origin.
VerifyReport verify_normal_form(const PolyJet& jet, unsigned series_order, double radius,
                                unsigned samples, std::uint64_t seed);

/// Classifies jet composed with `trials` random invertible integer linear
/// maps (entries in -3..3) and checks every verdict agrees with the
/// untransformed one.
bool gl2_invariance_fuzz(const PolyJet& jet, unsigned trials, std::uint64_t seed);

}  // namespace esing
