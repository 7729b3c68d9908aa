#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "esing/binary_form.hpp"
#include "esing/rational.hpp"

namespace esing {

/// Bivariate polynomial truncated at a total degree ("order"). Sparse:
/// absent keys are zero coefficients, and no stored key exceeds the order.
/// All arithmetic is exact on the retained coefficients.
class PolyJet {
  public:
    using Key = std::pair<unsigned, unsigned>;  // (x1 exponent, x2 exponent)

    explicit PolyJet(unsigned order) : order_(order) {}

    unsigned order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, Rational value);
    void add_coeff(unsigned i, unsigned j, const Rational& value);

    /// Largest total degree with a nonzero coefficient; 0 for the zero jet.
    unsigned support_degree() const;
    /// Largest x2 exponent present; 0 for the zero jet.
    unsigned max_x2_degree() const;

    /// Drops coefficients above new_order.
    PolyJet truncated(unsigned new_order) const;
    /// Raises the order, declaring the jet exact as a polynomial (the new
    /// coefficients between the old and new order are genuinely zero).
    PolyJet lifted(unsigned new_order) const;

    PolyJet operator-() const;
    PolyJet operator+(const PolyJet& o) const;
    PolyJet operator-(const PolyJet& o) const;
    /// Truncated product at min(order(), o.order()).
    PolyJet operator*(const PolyJet& o) const;
    PolyJet scaled(const Rational& s) const;

    /// Multiplies by the monomial x1^i0 * x2^j0, raising the order by i0+j0.
    PolyJet times_monomial(unsigned i0, unsigned j0) const;

    /// Sum over rows j >= k of coeff(i,j) x1^i x2^(j-k); order drops by k.
    PolyJet x2_shifted_down(unsigned k) const;

    /// Coefficients of x2^j as a dense series in x1 of length len.
    std::vector<Rational> x2_row(unsigned j, unsigned len) const;

    /// Partial derivative in x2. The result is exact for jets that are
    /// exact polynomials; its order is max(order-1, 0).
    PolyJet d2() const;

    Rational eval(const Rational& x1, const Rational& x2) const;
    double eval(double x1, double x2) const;

    friend bool operator==(const PolyJet& a, const PolyJet& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PolyJet& a, const PolyJet& b) { return !(a == b); }

    std::string str() const;

  private:
    unsigned order_;
    std::map<Key, Rational> coeffs_;
};

/// Pair of jets acting as a polynomial coordinate change with zero constant
/// term: x1 <- comp1(y), x2 <- comp2(y).
class PolyMap2 {
  public:
    PolyMap2(PolyJet comp1, PolyJet comp2);

    static PolyMap2 identity(unsigned order);
    /// comp1 = m[0] x1 + m[1] x2, comp2 = m[2] x1 + m[3] x2.
    static PolyMap2 linear(const std::array<Rational, 4>& m, unsigned order);

    const PolyJet& comp1() const { return comp1_; }
    const PolyJet& comp2() const { return comp2_; }
    unsigned order() const;

    /// Row-major 2x2 matrix of the degree-1 coefficients.
    std::array<Rational, 4> linear_part() const;
    Rational linear_determinant() const;
    bool is_invertible_linear_part() const;
    /// True when no component carries terms of total degree >= 2.
    bool is_linear() const;

    friend bool operator==(const PolyMap2& a, const PolyMap2& b) {
        return a.comp1_ == b.comp1_ && a.comp2_ == b.comp2_;
    }

  private:
    PolyJet comp1_;
    PolyJet comp2_;
};

/// Composition jet(map(y)), truncated at min(jet order, map order). Exact
/// for every retained coefficient: discarded terms all exceed the order.
PolyJet substitute(const PolyJet& jet, const PolyMap2& map);

/// Exact rational inverse of a purely linear invertible map.
/// Throws PreconditionError on nonlinear input or singular linear part.
PolyMap2 invert_linear(const PolyMap2& map);

/// (a o b): first apply b, then a. substitute(j, compose(a, b)) equals
/// substitute(substitute(j, a), b).
PolyMap2 compose(const PolyMap2& a, const PolyMap2& b);

/// Collects the coefficients of total degree k into a binary form.
BinaryForm homogeneous_part(const PolyJet& jet, unsigned k);

/// Builds a jet from a binary form (all terms at one total degree).
PolyJet jet_from_form(const BinaryForm& form, unsigned order);

// ---- recorded coordinate changes --------------------------------------

enum class StepKind {
    rotate_p3,
    shear_E6,
    qshear_E7,
    shear_E7b,
    qshear_E8,
    shear_E8b,
    translate_branch,
};

const char* step_name(StepKind kind);
StepKind step_kind_from_name(const std::string& name);

struct TransformStep {
    StepKind kind;
    PolyMap2 map;
    std::vector<std::pair<std::string, Rational>> params;
};

}  // namespace esing
