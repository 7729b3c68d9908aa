#include "esing/classify.hpp"

namespace esing {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::E6: return "E6";
        case Verdict::E7: return "E7";
        case Verdict::E8: return "E8";
        case Verdict::NotEType: return "NotEType";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    throw InternalError("unknown verdict");
}

bool check_critical_origin(const PolyJet& jet) {
    if (jet.order() < 2) {
        throw PreconditionError("origin check needs jet order >= 2");
    }
    for (const auto& [key, c] : jet.terms()) {
        if (key.first + key.second <= 2 && !c.is_zero()) return false;
    }
    return true;
}

namespace {

/// Linear change sending the cube line L = a*x1 + b*x2 to the coordinate
/// x2: returns the map to substitute into the jet (new coordinates on the
/// right), so that L(map(y)) = y2 exactly.
PolyMap2 rotation_for(const LinearForm& L, unsigned order) {
    const Rational& a = L.a();
    const Rational& b = L.b();
    if (!b.is_zero()) {
        // y1 = x1, y2 = L  =>  x1 = y1, x2 = (y2 - a*y1)/b
        return PolyMap2::linear({Rational(1), Rational(0), -a / b, b.reciprocal()}, order);
    }
    // y1 = x2, y2 = L = a*x1  =>  x1 = y2/a, x2 = y1
    return PolyMap2::linear({Rational(0), a.reciprocal(), Rational(1), Rational(0)}, order);
}

}  // namespace

std::pair<Classification, Certificate> classify(const PolyJet& jet) {
    if (jet.order() < 5) {
        throw PreconditionError("classification requires jet order >= 5");
    }
    if (!check_critical_origin(jet)) {
        throw PreconditionError("origin is not a degenerate critical point of the jet");
    }

    Classification cls{};
    Certificate cert;

    const BinaryForm p3 = homogeneous_part(jet, 3);
    if (p3.is_zero()) {
        cls.verdict = Verdict::NotEType;
        cls.reason = "m_S1(p3) != 3: outside E classification";
        return {cls, cert};
    }
    cert.m_s1_p3 = m_circle(p3);

    auto cube = extract_perfect_cube(p3);
    if (!cube) {
        cls.verdict = Verdict::NotEType;
        cls.reason = "m_S1(p3) != 3: outside E classification";
        return {cls, cert};
    }
    const auto& [cube_coeff, line] = *cube;
    cert.cube_root_form = line;

    // Rotate so the cube line becomes x2; the cubic part turns into c*x2^3.
    TransformStep rotate{StepKind::rotate_p3, rotation_for(line, jet.order()),
                         {{"a", line.a()}, {"b", line.b()}}};
    PolyJet rotated = substitute(jet, rotate.map);
    if (rotated.coeff(0, 3) != cube_coeff) {
        throw InternalError("rotation did not normalize the cubic part");
    }
    cert.transform_chain.push_back(std::move(rotate));
    cert.normalized_jet = rotated;

    const BinaryForm p4r = homogeneous_part(rotated, 4);
    const BinaryForm p3r = homogeneous_part(rotated, 3);
    const LinearForm x2_line(Rational(0), Rational(1));

    auto mult = linear_factor_multiplicity(x2_line, p4r);
    if (!mult) {
        cert.common_mult_infinite = true;
        cert.res_p3_p4 = Rational(0);
    } else {
        cert.common_mult_in_p4 = *mult;
        cert.res_p3_p4 = resultant(p3r, p4r);
    }

    if (mult && *mult == 0) {
        cls.verdict = Verdict::E6;
        cls.sign = rotated.coeff(4, 0).sign();
        if (cls.sign == 0) {
            throw InternalError("E6 branch with vanishing x1^4 coefficient");
        }
        return {cls, cert};
    }
    if (mult && *mult == 1) {
        cls.verdict = Verdict::E7;
        return {cls, cert};
    }

    // Cube line divides p4 at least twice (or p4 vanishes): E8 needs the
    // quintic part to stay clear of the line.
    const BinaryForm p5r = homogeneous_part(rotated, 5);
    if (p5r.is_zero()) {
        cert.res_p3_p5 = Rational(0);
        cls.verdict = Verdict::Indeterminate;
        cls.reason = "cube line of p3 divides p4 with multiplicity >= 2 and divides p5: "
                     "no E-type criterion applies within the order-5 jet";
        return {cls, cert};
    }
    cert.res_p3_p5 = resultant(p3r, p5r);
    auto mult5 = linear_factor_multiplicity(x2_line, p5r);
    if (mult5 && *mult5 == 0) {
        cls.verdict = Verdict::E8;
        return {cls, cert};
    }
    cls.verdict = Verdict::Indeterminate;
    cls.reason = "cube line of p3 divides p4 with multiplicity >= 2 and divides p5: "
                 "no E-type criterion applies within the order-5 jet";
    return {cls, cert};
}

bool res_equivalence_check(const BinaryForm& p3, const BinaryForm& p5, const LinearForm& L) {
    const bool res_nonzero = p5.is_zero() ? false : !resultant(p3, p5).is_zero();
    auto mult = linear_factor_multiplicity(L, p5);
    const bool line_free = mult.has_value() && *mult == 0;
    return res_nonzero == line_free;
}

std::vector<std::string> explain_decision(const Classification& cls, const Certificate& cert) {
    std::vector<std::string> out;
    if (!cert.m_s1_p3) {
        out.push_back("cubic part p3 is identically zero; maximal circle-root order undefined");
        out.push_back("verdict NotEType: E6/E7/E8 all require m_S1(p3) = 3");
        return out;
    }
    out.push_back("m_S1(p3) = " + std::to_string(*cert.m_s1_p3) +
                  " (largest multiplicity of a real line in the cubic part)");
    if (!cert.cube_root_form) {
        out.push_back("verdict NotEType: E6/E7/E8 all require m_S1(p3) = 3, i.e. p3 = c*L^3");
        return out;
    }
    out.push_back("p3 = c*L^3 with L = " + cert.cube_root_form->str() +
                  "; rotated so L becomes x2");
    if (cert.common_mult_infinite) {
        out.push_back("quartic part of the rotated jet is zero: L divides p4 infinitely");
    } else if (cert.common_mult_in_p4) {
        out.push_back("L divides the quartic part with multiplicity " +
                      std::to_string(*cert.common_mult_in_p4) + " (Res(p3,p4) = " +
                      cert.res_p3_p4->pretty() + ")");
    }
    switch (cls.verdict) {
        case Verdict::E6:
            out.push_back("multiplicity 0, i.e. Res(p3,p4) != 0: E6 criterion met; sign " +
                          std::string(cls.sign > 0 ? "+" : "-") +
                          " from the x1^4 coefficient of the rotated jet");
            break;
        case Verdict::E7:
            out.push_back("L is a simple factor of p4: E7 criterion met");
            break;
        case Verdict::E8:
            out.push_back("multiplicity >= 2 and Res(p3,p5) = " + cert.res_p3_p5->pretty() +
                          " != 0 (L does not divide p5): E8 criterion met");
            break;
        case Verdict::Indeterminate:
            out.push_back("multiplicity >= 2 but L also divides p5: none of the E6/E7/E8 "
                          "criteria apply within the order-5 jet");
            break;
        case Verdict::NotEType:
            break;
    }
    return out;
}

}  // namespace esing
