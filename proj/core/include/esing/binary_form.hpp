#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esing/rational.hpp"

namespace esing {

/// Homogeneous polynomial of a declared degree in two variables.
/// coeffs()[i] multiplies x1^(degree-i) * x2^i. The declared degree is kept
/// even when leading or trailing coefficients vanish; an all-zero
/// coefficient list is legal and reported by is_zero().
class BinaryForm {
  public:
    explicit BinaryForm(unsigned degree) : degree_(degree), coeffs_(degree + 1) {}
    BinaryForm(unsigned degree, std::vector<Rational> coeffs);

    unsigned degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x1^(degree-i) * x2^i.
    const Rational& coeff(unsigned i) const;
    void set_coeff(unsigned i, Rational value);

    bool is_zero() const;

    /// Degree of the dehomogenization p(1, t) in t; nullopt for the zero
    /// form. degree() minus this value is the multiplicity of x1 in p.
    std::optional<unsigned> support_degree_in_x2() const;

    Rational eval(const Rational& x1, const Rational& x2) const;
    double eval(double x1, double x2) const;

    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& other) const;
    BinaryForm operator+(const BinaryForm& other) const;
    BinaryForm operator-(const BinaryForm& other) const;
    BinaryForm scaled(const Rational& s) const;
    BinaryForm pow(unsigned e) const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    /// Splits the form into (content, primitive part): primitive part has
    /// coprime integer coefficients and positive first nonzero coefficient.
    /// Zero form yields (0, zero form).
    std::pair<Rational, BinaryForm> primitive_part() const;

    std::string str() const;

  private:
    unsigned degree_;
    std::vector<Rational> coeffs_;
};

/// a*x1 + b*x2 with (a, b) != (0, 0).
class LinearForm {
  public:
    LinearForm(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    BinaryForm as_form() const;

    /// Scales so coefficients are coprime integers with the first nonzero
    /// one positive. Returns (scale, normalized) with this = scale * normalized.
    std::pair<Rational, LinearForm> normalized() const;

    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

  private:
    Rational a_;
    Rational b_;
};

// ---- factor structure ------------------------------------------------

struct SquarefreeFactor {
    BinaryForm factor;      // primitive, square-free, first nonzero coeff > 0
    unsigned multiplicity;
};

/// Square-free decomposition p = unit * prod factor_i^mult_i with pairwise
/// coprime square-free primitive factors. Computed by Yun's algorithm on the
/// dehomogenization plus explicit handling of the x1-power factor.
/// Throws PreconditionError on the zero form.
struct SquarefreeDecomposition {
    Rational unit;
    std::vector<SquarefreeFactor> factors;  // sorted: multiplicity desc, then coeffs
};
SquarefreeDecomposition squarefree_decomposition(const BinaryForm& p);

/// True iff the square-free nonzero form f vanishes somewhere on the unit
/// circle: x1 divides f, or the Sturm count of f(1, t) finds a real root.
bool has_real_projective_root(const BinaryForm& f);

/// Largest multiplicity among square-free factors that vanish on the unit
/// circle; 0 when no factor does. Throws PreconditionError on the zero form.
unsigned m_circle(const BinaryForm& p);

/// Resultant of two binary forms of declared degrees m, n >= 1 as the
/// (m+n)x(m+n) Sylvester determinant over the full coefficient lists,
/// evaluated by fraction-free (Bareiss) elimination after clearing
/// denominators. Zero iff the forms share a projective root.
/// Throws PreconditionError if either form is zero.
Rational resultant(const BinaryForm& p, const BinaryForm& q);

/// Largest m with L^m dividing p; nullopt means infinite (p is the zero form).
std::optional<unsigned> linear_factor_multiplicity(const LinearForm& L, const BinaryForm& p);

/// If the nonzero degree-3 form equals c * L^3 over the rationals, returns
/// (c, L) with L primitive and first nonzero coefficient positive; otherwise
/// nullopt. Succeeds exactly when m_circle(p) == 3.
std::optional<std::pair<Rational, LinearForm>> extract_perfect_cube(const BinaryForm& p);

/// Greatest common divisor as forms (primitive, first nonzero coefficient
/// positive); declared degree equals the true gcd degree. gcd with the zero
/// form returns the other argument's primitive part.
BinaryForm form_gcd(const BinaryForm& p, const BinaryForm& q);

}  // namespace esing
