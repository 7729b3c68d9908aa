#include <doctest.h>

#include "esing/classify.hpp"
#include "esing/json_io.hpp"
#include "esing/normal_form.hpp"
#include "esing/parse.hpp"

using esing::PolyJet;

namespace {

PolyJet germ(const std::string& text, unsigned order = 8) {
    return esing::parse_germ(text, order).jet;
}

}  // namespace

TEST_CASE("classify documents are byte-deterministic") {
    const PolyJet jet = germ("(x1+x2)^3 - x1^4");
    auto [cls, cert] = esing::classify(jet);
    const std::string a = esing::jsonio::classify_document(cls, cert, nullptr, false);
    const std::string b = esing::jsonio::classify_document(cls, cert, nullptr, false);
    CHECK(a == b);
    CHECK(a.find("\"verdict\":\"E6\"") != std::string::npos);
    CHECK(a.find("\"sign\":\"-\"") != std::string::npos);
    // rationals are num/den strings
    CHECK(a.find("\"res_p3_p4\"") != std::string::npos);
    CHECK(a.find("e-") == std::string::npos);  // no float-formatted rationals
}

TEST_CASE("chain parses back and replays to the reduced jet") {
    const PolyJet jet = germ("x2^3 + x1^4 + 4*x1^3*x2");
    auto [cls, cert] = esing::classify(jet);
    auto [step, reduced] = esing::reduce_e6(*cert.normalized_jet);
    cert.transform_chain.push_back(step);
    cert.normalized_jet = reduced;
    const std::string doc = esing::jsonio::reduce_document(cls, cert, true, false);

    const auto steps = esing::jsonio::parse_transform_chain(doc);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].kind == esing::StepKind::rotate_p3);
    CHECK(steps[1].kind == esing::StepKind::shear_E6);
    PolyJet replay = jet;
    for (const auto& s : steps) replay = substitute(replay, s.map);
    CHECK(replay == esing::jsonio::parse_normalized_jet(doc));
    CHECK(replay == reduced);
}

TEST_CASE("error documents carry position data") {
    const std::string doc = esing::jsonio::error_document("parse_error", "boom", 1, 4, false);
    CHECK(doc.find("\"line\":1") != std::string::npos);
    CHECK(doc.find("\"column\":4") != std::string::npos);
    const std::string clean = esing::jsonio::error_document("input_error", "bad", 0, 0, false);
    CHECK(clean.find("line") == std::string::npos);
}

TEST_CASE("infinite multiplicity serializes as a string") {
    auto [cls, cert] = esing::classify(germ("x2^3 + x1^5"));
    const std::string doc = esing::jsonio::classify_document(cls, cert, nullptr, false);
    CHECK(doc.find("\"common_mult_in_p4\":\"infinite\"") != std::string::npos);
}
