#include <doctest.h>

#include <cmath>
#include <random>

#include "esing/parse.hpp"
#include "esing/verify.hpp"
#include "test_util.hpp"

using esing::PolyJet;
using esing::Verdict;
using esing::VerifyReport;

namespace {

PolyJet germ(const std::string& text, unsigned order = 8) {
    return esing::parse_germ(text, order).jet;
}

}  // namespace

TEST_CASE("exact normal forms verify at noise level") {
    for (const char* text : {"x2^3 + x1^4", "x2^3 - x1^4", "x2^3 + x1^3*x2", "x2^3 + x1^5"}) {
        const VerifyReport rep = esing::verify_normal_form(germ(text), 8, 0.1, 500, 0);
        CAPTURE(text);
        CHECK(rep.max_residual < 1e-13);
        CHECK(rep.max_residual_half < 1e-13);
        CHECK(rep.pass);
        CHECK(rep.jacobian_ok);
        CHECK(rep.skipped_samples == 0);
    }
}

TEST_CASE("verification reports are bit-identical for identical inputs") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + 2*x1^2*x2^2 + x1^6");
    const VerifyReport a = esing::verify_normal_form(jet, 10, 0.1, 200, 42);
    const VerifyReport b = esing::verify_normal_form(jet, 10, 0.1, 200, 42);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.max_residual_half == b.max_residual_half);
    CHECK(a.residual_order_estimate == b.residual_order_estimate);
    CHECK(a.jacobian_numeric == b.jacobian_numeric);
    CHECK(a.skipped_samples == b.skipped_samples);
    // a different seed draws different points
    const VerifyReport c = esing::verify_normal_form(jet, 10, 0.1, 200, 43);
    CHECK(a.max_residual != c.max_residual);
}

TEST_CASE("perturbed germs converge at the truncation order") {
    const VerifyReport rep =
        esing::verify_normal_form(germ("x2^3 + x1^4 + 2*x1^3*x2 + 3*x1^2*x2^2 + x1^5"), 12, 0.1,
                                  300, 7);
    CHECK(rep.verdict == Verdict::E6);
    CHECK(rep.residual_order_estimate >= 12.5);
    CHECK(rep.pass);
}

TEST_CASE("jacobian closed forms match finite differences") {
    // E6: |c0|^(1/4) * |c|^(1/3) with c0 = 3, c = 2
    VerifyReport rep = esing::verify_normal_form(germ("2*x2^3 + 3*x1^4"), 8, 0.1, 50, 0);
    REQUIRE(rep.jacobian_closed_form.has_value());
    CHECK(*rep.jacobian_closed_form ==
          doctest::Approx(std::pow(3.0, 0.25) * std::cbrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(rep.jacobian_numeric) ==
          doctest::Approx(*rep.jacobian_closed_form).epsilon(1e-4));

    // E8: |d0|^(1/5) * |c|^(1/3) with d0 = -4, c = 1
    rep = esing::verify_normal_form(germ("x2^3 - 4*x1^5"), 8, 0.1, 50, 0);
    REQUIRE(rep.jacobian_closed_form.has_value());
    CHECK(*rep.jacobian_closed_form == doctest::Approx(std::pow(4.0, 0.2)).epsilon(1e-12));
    CHECK(rep.jacobian_ok);

    // E7 has no closed form; the numeric determinant must be nonzero
    rep = esing::verify_normal_form(germ("x2^3 + x1^3*x2 + x1^6"), 8, 0.1, 50, 0);
    CHECK_FALSE(rep.jacobian_closed_form.has_value());
    CHECK(rep.jacobian_ok);
    CHECK(std::abs(rep.jacobian_numeric) > 1e-3);
}

TEST_CASE("non-E germs cannot be verified") {
    CHECK_THROWS_AS(esing::verify_normal_form(germ("x2^3 + x1^2*x2"), 8, 0.1, 10, 0),
                    esing::PreconditionError);
}

TEST_CASE("degenerate verification parameters are rejected") {
    const PolyJet jet = germ("x2^3 + x1^5");
    CHECK_THROWS_AS(esing::verify_normal_form(jet, 8, 0.1, 0, 0), esing::PreconditionError);
    CHECK_THROWS_AS(esing::verify_normal_form(jet, 8, 0.0, 10, 0), esing::PreconditionError);
    CHECK_THROWS_AS(esing::verify_normal_form(jet, 8, -1.0, 10, 0), esing::PreconditionError);
    CHECK_THROWS_AS(esing::verify_normal_form(jet, 6, 0.1, 10, 0), esing::PreconditionError);
}

TEST_CASE("linear invariance fuzz on the model germs") {
    CHECK(esing::gl2_invariance_fuzz(germ("x2^3 + x1^4"), 100, 1));
    CHECK(esing::gl2_invariance_fuzz(germ("x2^3 + x1^3*x2"), 100, 2));
    CHECK(esing::gl2_invariance_fuzz(germ("x2^3 + x1^5"), 100, 3));
}

TEST_CASE("linear invariance fuzz on random classified germs") {
    std::mt19937_64 gen(89);
    for (int kind : {6, 7, 8}) {
        const PolyJet jet = testutil::rand_e_type_jet(gen, kind, 6);
        CHECK(esing::gl2_invariance_fuzz(jet, 25, 4));
    }
}

TEST_CASE("full pipeline soaks: residuals vanish on some neighborhood") {
    // End-to-end through rotation, shears, branch translations and the
    // numeric map; the pipeline's exact consistency checks make any
    // truncation slip throw. The classification is local: a germ's series
    // may converge only on a tiny disk (shear parameters like b0/c1
    // compound coefficients fast), so the radius is halved until the
    // residual reaches noise level.
    std::mt19937_64 gen(97);
    for (int i = 0; i < 60; ++i) {
        const int kind = 6 + i % 3;
        const PolyJet jet = testutil::rand_e_type_jet(gen, kind, 7, /*scramble=*/i % 2 == 0);
        CAPTURE(i);
        CAPTURE(kind);
        double radius = 0.02;
        VerifyReport rep;
        for (int halvings = 0; halvings < 20; ++halvings) {
            rep = esing::verify_normal_form(jet, 11, radius, 40, 5);
            if (rep.max_residual < 1e-8) break;
            radius /= 2;
        }
        CHECK(rep.max_residual < 1e-8);
        CHECK(rep.jacobian_ok);
    }
}

TEST_CASE("normal-form map fixes the identity germs pointwise") {
    // x2^3 + x1^5 reduces through identity maps: the root map is x -> x
    const esing::NormalFormContext ctx =
        esing::build_normal_form_context(germ("x2^3 + x1^5"), 8);
    const auto y = esing::normal_form_map(ctx, {0.1, 0.05});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK((*y)[1] == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(ctx.normal_form_value(*y) ==
          doctest::Approx(ctx.germ_value({0.1, 0.05})).epsilon(1e-14));
}

TEST_CASE("context exposes a replayable chain ending at the reduced jet") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + x1^2*x2^2 + x1^6", 9);
    const esing::NormalFormContext ctx = esing::build_normal_form_context(jet, 9);
    PolyJet replay = jet.lifted(9);
    for (const auto& step : ctx.certificate.transform_chain) {
        replay = substitute(replay, step.map);
    }
    CHECK(replay == ctx.reduced);
    // E7 chain: rotate, two shears, two branch translations
    CHECK(ctx.certificate.transform_chain.size() == 5);
    REQUIRE(ctx.branch_w.has_value());
    REQUIRE(ctx.e7_cube_unit.has_value());
    REQUIRE(ctx.e7_line_unit.has_value());
    CHECK(ctx.e7_line_unit->coeff(0, 0) == esing::Rational(1));
}
