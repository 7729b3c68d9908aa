#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esing/binary_form.hpp"
#include "esing/poly_jet.hpp"

namespace esing {

enum class Verdict { E6, E7, E8, NotEType, Indeterminate };

const char* verdict_name(Verdict v);

/// Outcome of the classification. E6 carries the sign of its normal form
/// sign*y1^4 + y2^3; NotEType and Indeterminate carry a reason string.
struct Classification {
    Verdict verdict;
    int sign = 0;        // +1 or -1 for E6, 0 otherwise
    std::string reason;  // nonempty for NotEType / Indeterminate

    bool is_e_type() const {
        return verdict == Verdict::E6 || verdict == Verdict::E7 || verdict == Verdict::E8;
    }
    friend bool operator==(const Classification& a, const Classification& b) {
        return a.verdict == b.verdict && a.sign == b.sign;
    }
};

/// Everything that justifies the verdict. Fields are filled exactly as far
/// as the decision tree progressed; resultants are those of the rotated
/// forms. common_mult_in_p4 nullopt means infinite (p4 of the rotated jet
/// is the zero form), and res_p3_p4 / res_p3_p5 record 0 for a zero p4/p5.
struct Certificate {
    std::optional<unsigned> m_s1_p3;
    std::optional<LinearForm> cube_root_form;
    std::optional<Rational> res_p3_p4;
    bool common_mult_infinite = false;
    std::optional<unsigned> common_mult_in_p4;  // unset while infinite or unreached
    std::optional<Rational> res_p3_p5;
    std::vector<TransformStep> transform_chain;
    std::optional<PolyJet> normalized_jet;
};

/// True iff every coefficient of total degree <= 2 vanishes, i.e. the
/// origin is a critical point with zero Hessian.
bool check_critical_origin(const PolyJet& jet);

/// Decision tree on the cubic, quartic and quintic parts of a jet of order
/// >= 5 with a degenerate critical point at the origin:
///   - p3 not a perfect cube                     -> NotEType
///   - cube line L not dividing p4               -> E6 (sign of the rotated x1^4 coefficient)
///   - L dividing p4 exactly once                -> E7
///   - L dividing p4 twice or more, L not | p5   -> E8
///   - otherwise                                 -> Indeterminate
/// Throws PreconditionError when the origin check or order bound fails.
std::pair<Classification, Certificate> classify(const PolyJet& jet);

/// Cross-check of the two common-root tests for p3 = c*L^3: the resultant
/// with p5 vanishes exactly when L divides p5. Returns true when the two
/// routes agree (a zero p5 counts as resultant zero).
bool res_equivalence_check(const BinaryForm& p3, const BinaryForm& p5, const LinearForm& L);

/// Human-readable decision path derived from a finished classification.
std::vector<std::string> explain_decision(const Classification& cls, const Certificate& cert);

}  // namespace esing
