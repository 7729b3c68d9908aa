#include <doctest.h>

#include <random>

#include "esing/classify.hpp"
#include "esing/normal_form.hpp"
#include "esing/parse.hpp"
#include "test_util.hpp"

using esing::PolyJet;
using esing::PowerSeries1;
using esing::Rational;
using esing::TransformStep;

namespace {

PolyJet germ(const std::string& text, unsigned order = 8) {
    return esing::parse_germ(text, order).jet;
}

Rational rat(long long n, long long d = 1) {
    return Rational(esing::Int(n), esing::Int(d));
}

}  // namespace

TEST_CASE("E6 reduction: identity when the mixed coefficient is absent") {
    const PolyJet jet = germ("x2^3 + x1^4");
    auto [step, out] = esing::reduce_e6(jet);
    CHECK(out == jet);
    CHECK(step.params[0].second == Rational(0));
}

TEST_CASE("E6 reduction kills x1^3*x2 with shear parameter 1") {
    const PolyJet jet = germ("x2^3 + x1^4 + 4*x1^3*x2");
    auto [step, out] = esing::reduce_e6(jet);
    CHECK(step.params[0].second == Rational(1));
    // (y1-y2)^4 + 4(y1-y2)^3 y2 + y2^3 expanded by hand
    CHECK(out.coeff(4, 0) == rat(1));
    CHECK(out.coeff(3, 1).is_zero());
    CHECK(out.coeff(2, 2) == rat(-6));
    CHECK(out.coeff(1, 3) == rat(8));
    CHECK(out.coeff(0, 4) == rat(-3));
    CHECK(out.coeff(0, 3) == rat(1));
    // replayable
    CHECK(substitute(jet, step.map) == out);
}

TEST_CASE("E6 reduction on random jets preserves x1^4 and the cubic part") {
    std::mt19937_64 gen(73);
    for (int i = 0; i < 100; ++i) {
        const PolyJet jet = testutil::rand_e_type_jet(gen, 6, 8);
        auto [step, out] = esing::reduce_e6(jet);
        CHECK(out.coeff(3, 1).is_zero());
        CHECK(out.coeff(4, 0) == jet.coeff(4, 0));
        CHECK(homogeneous_part(out, 3) == homogeneous_part(jet, 3));
        CHECK(substitute(jet, step.map) == out);
        CHECK(step.map.is_invertible_linear_part());
    }
}

TEST_CASE("E6 reduction needs a nonzero x1^4 coefficient") {
    CHECK_THROWS_WITH_AS(esing::reduce_e6(germ("x2^3 + x1^3*x2")),
                         "E6 reduction requires Res(p3,p4) != 0", esing::PreconditionError);
}

TEST_CASE("E7 reduction: identity on the bare normal form") {
    const PolyJet jet = germ("x2^3 + x1^3*x2");
    auto [steps, out] = esing::reduce_e7(jet);
    CHECK(out == jet);
    CHECK(steps[0].params[0].second == Rational(0));
    CHECK(steps[1].params[0].second == Rational(0));
}

TEST_CASE("E7 quadratic shear removes the pure x1^5 term") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + x1^5");
    auto [steps, out] = esing::reduce_e7(jet);
    CHECK(steps[0].params[0].second == Rational(1));  // s = b0/c1
    CHECK(out.coeff(5, 0).is_zero());
    CHECK(out.coeff(3, 1) == rat(1));
    // hand expansion of x2 -> x2 - x1^2 on the source, before the linear step:
    const PolyJet mid = substitute(jet, steps[0].map);
    CHECK(mid.coeff(0, 3) == rat(1));
    CHECK(mid.coeff(3, 1) == rat(1));
    CHECK(mid.coeff(2, 2) == rat(-3));
    CHECK(mid.coeff(4, 1) == rat(3));
    CHECK(mid.coeff(6, 0) == rat(-1));
    CHECK(mid.coeff(5, 0).is_zero());
}

TEST_CASE("E7 linear shear removes x1^2*x2^2 with parameter 1") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + 3*x1^2*x2^2");
    auto [steps, out] = esing::reduce_e7(jet);
    CHECK(steps[1].params[0].second == Rational(1));
    CHECK(out.coeff(2, 2).is_zero());
    CHECK(out.coeff(3, 1) == rat(1));
    // z-coordinates expansion by hand: z1^3 z2 - 3 z1 z2^3 + 2 z2^4 + z2^3
    CHECK(out.coeff(1, 3) == rat(-3));
    CHECK(out.coeff(0, 4) == rat(2));
}

TEST_CASE("E7 reduction rejections") {
    CHECK_THROWS_WITH_AS(esing::reduce_e7(germ("x2^3 + x1^2*x2^2 + x1^5")),
                         "E7 reduction requires simple common factor", esing::PreconditionError);
    CHECK_THROWS_AS(esing::reduce_e7(germ("x2^3 + x1^4")), esing::PreconditionError);
}

TEST_CASE("E8 quadratic shear kills x1^2*x2^2 and fixes x1^5") {
    const PolyJet jet = germ("x2^3 + 3*x1^2*x2^2 + x1^5");
    auto [steps, out] = esing::reduce_e8(jet);
    CHECK(steps[0].params[0].second == Rational(1));  // t = c2/(3c)
    const PolyJet mid = substitute(jet, steps[0].map);
    // hand expansion: y2^3 - 3 y1^4 y2 + y1^5 + 2 y1^6
    CHECK(mid.coeff(2, 2).is_zero());
    CHECK(mid.coeff(4, 1) == rat(-3));
    CHECK(mid.coeff(5, 0) == rat(1));
    CHECK(mid.coeff(6, 0) == rat(2));
    // second step then clears x1^4*x2, keeping x1^5
    CHECK(out.coeff(4, 1).is_zero());
    CHECK(out.coeff(5, 0) == rat(1));
}

TEST_CASE("E8 linear shear alone, parameter 1") {
    const PolyJet jet = germ("x2^3 + x1^5 + 5*x1^4*x2");
    auto [steps, out] = esing::reduce_e8(jet);
    CHECK(steps[0].params[0].second == Rational(0));
    CHECK(steps[1].params[0].second == Rational(1));
    CHECK(out.coeff(4, 1).is_zero());
    CHECK(out.coeff(5, 0) == rat(1));
}

TEST_CASE("E8 quadratic shear parameter carries the cube coefficient") {
    // cubic part 2*x2^3: t = c2/(3c) = 3/(3*2) = 1/2
    const PolyJet jet = germ("2*x2^3 + 3*x1^2*x2^2 + x1^5");
    auto [steps, out] = esing::reduce_e8(jet);
    CHECK(steps[0].params[0].second == rat(1, 2));
    CHECK(out.coeff(2, 2).is_zero());
    CHECK(out.coeff(5, 0) == rat(1));
}

TEST_CASE("E8 reduction rejections") {
    CHECK_THROWS_WITH_AS(esing::reduce_e8(germ("x2^3 + x1^2*x2^2 + x1^4*x2")),
                         "not E8: Res(p3,p5) = 0", esing::PreconditionError);
    CHECK_THROWS_AS(esing::reduce_e8(germ("x2^3 + x1^4 + x1^5")), esing::PreconditionError);
}

TEST_CASE("reductions on random jets are replayable with invertible chains") {
    std::mt19937_64 gen(79);
    for (int kind : {6, 7, 8}) {
        for (int i = 0; i < 60; ++i) {
            const PolyJet jet = testutil::rand_e_type_jet(gen, kind, 8);
            std::vector<TransformStep> steps;
            PolyJet out(8);
            if (kind == 6) {
                auto [s, o] = esing::reduce_e6(jet);
                steps.push_back(s);
                out = o;
            } else if (kind == 7) {
                auto [s, o] = esing::reduce_e7(jet);
                steps = s;
                out = o;
            } else {
                auto [s, o] = esing::reduce_e8(jet);
                steps = s;
                out = o;
            }
            PolyJet replay = jet;
            Rational det(1);
            for (const auto& step : steps) {
                replay = substitute(replay, step.map);
                det *= step.map.linear_determinant();
                if (step.kind == esing::StepKind::qshear_E7 ||
                    step.kind == esing::StepKind::qshear_E8) {
                    // quadratic shears are unipotent: identity linear part
                    const auto m = step.map.linear_part();
                    CHECK(m[0] == Rational(1));
                    CHECK(m[1].is_zero());
                    CHECK(m[2].is_zero());
                    CHECK(m[3] == Rational(1));
                }
            }
            CHECK(replay == out);
            CHECK_FALSE(det.is_zero());
            CHECK(homogeneous_part(out, 3) == homogeneous_part(jet, 3));
        }
    }
}

// ---- zero branch ---------------------------------------------------------

TEST_CASE("zero branch: trivial when b0 vanishes") {
    const PolyJet jet = germ("x2^3 + x1^3*x2");
    auto zb = esing::zero_branch(jet, 8);
    CHECK(zb.w.is_zero());
    CHECK(zb.jet == jet);
}

TEST_CASE("zero branch on x2^3 + x1^3*x2 + x1^6") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + x1^6", 9);
    auto zb = esing::zero_branch(jet, 9);
    CHECK(zb.w.coeff(0) == rat(-1));
    // w = -1 + x1^3 + O(x1^6): from w^3 x1^3 + w + 1 = 0
    CHECK(zb.w.coeff(1).is_zero());
    CHECK(zb.w.coeff(2).is_zero());
    CHECK(zb.w.coeff(3) == rat(1));
    for (unsigned k = 0; k <= 9; ++k) CHECK(zb.jet.coeff(k, 0).is_zero());
    CHECK(zb.jet.coeff(3, 1) == rat(1));
    CHECK(substitute(jet, zb.step.map) == zb.jet);
}

TEST_CASE("zero branch pivot value") {
    // b1(0) = 2, b0(0) = 3: w(0) = -3/2
    PolyJet jet(10);
    jet.set_coeff(0, 3, rat(1));
    jet.set_coeff(3, 1, rat(2));
    jet.set_coeff(4, 1, rat(1));
    jet.set_coeff(6, 0, rat(3));
    jet.set_coeff(7, 0, rat(-1));
    jet.set_coeff(1, 3, rat(1));
    auto zb = esing::zero_branch(jet, 10);
    CHECK(zb.w.coeff(0) == rat(-3, 2));
    for (unsigned k = 0; k <= 10; ++k) CHECK(zb.jet.coeff(k, 0).is_zero());
    CHECK(zb.jet.coeff(3, 1) == rat(2));
}

TEST_CASE("zero branch on random pre-forms") {
    std::mt19937_64 gen(83);
    for (int i = 0; i < 60; ++i) {
        const unsigned W = 9 + gen() % 3;
        PolyJet jet(W);
        jet.set_coeff(0, 3, testutil::rand_nonzero_rational(gen, 3, 2));
        jet.set_coeff(3, 1, testutil::rand_nonzero_rational(gen, 3, 2));
        for (unsigned k = 4; k + 1 <= W; ++k) jet.set_coeff(k, 1, testutil::rand_rational(gen, 3, 2));
        for (unsigned k = 6; k <= W; ++k) jet.set_coeff(k, 0, testutil::rand_rational(gen, 3, 2));
        for (unsigned j = 3; j <= W; ++j) {
            for (unsigned k = (j == 3 ? 1u : 0u); k + j <= W; ++k) {
                if (gen() % 2 == 0) jet.set_coeff(k, j, testutil::rand_rational(gen, 2, 2));
            }
        }
        auto zb = esing::zero_branch(jet, W);
        CHECK(zb.w.coeff(0) == -jet.coeff(6, 0) / jet.coeff(3, 1));
        for (unsigned k = 0; k <= W; ++k) CHECK(zb.jet.coeff(k, 0).is_zero());
        for (unsigned k = 0; k < 3; ++k) CHECK(zb.jet.coeff(k, 1).is_zero());
        CHECK(zb.jet.coeff(3, 1) == jet.coeff(3, 1));
        CHECK(substitute(jet, zb.step.map) == zb.jet);
    }
}

TEST_CASE("zero branch rejects violated hypotheses") {
    // b1(0) = 0
    PolyJet jet(8);
    jet.set_coeff(0, 3, rat(1));
    jet.set_coeff(4, 1, rat(1));
    jet.set_coeff(6, 0, rat(1));
    CHECK_THROWS_AS(esing::zero_branch(jet, 8), esing::PreconditionError);
    // pure part below x1^6
    CHECK_THROWS_AS(esing::zero_branch(germ("x2^3 + x1^3*x2 + x1^5"), 8), esing::InternalError);
}

TEST_CASE("E7 pre-form bridge") {
    const PolyJet jet = germ("x2^3 + x1^3*x2 + x1^2*x2^2 + x1^6", 10);
    auto [steps, reduced] = esing::reduce_e7(jet);
    const esing::E7Preform pf = esing::e7_preform(reduced);
    for (unsigned k = 0; k < 6; ++k) CHECK(pf.preform.coeff(k, 0).is_zero());
    for (unsigned k = 0; k < 3; ++k) CHECK(pf.preform.coeff(k, 1).is_zero());
    for (unsigned k = 0; k + 2 <= 10; ++k) CHECK(pf.preform.coeff(k, 2).is_zero());
    CHECK(pf.dec.ord_b1 == 3u);
    REQUIRE(pf.dec.ord_b0.value_or(6) >= 6);
    CHECK(substitute(reduced, pf.psi_step.map) == pf.preform);
    // the branch translation then applies cleanly
    auto zb = esing::zero_branch(pf.preform, 10);
    for (unsigned k = 0; k <= 10; ++k) CHECK(zb.jet.coeff(k, 0).is_zero());
}
