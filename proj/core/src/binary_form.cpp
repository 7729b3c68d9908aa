#include "esing/binary_form.hpp"

#include <sstream>

namespace esing {

BinaryForm::BinaryForm(unsigned degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree_ + 1) {
        throw PreconditionError("binary form needs degree+1 coefficients");
    }
}

const Rational& BinaryForm::coeff(unsigned i) const {
    if (i > degree_) throw PreconditionError("coefficient index out of range");
    return coeffs_[i];
}

void BinaryForm::set_coeff(unsigned i, Rational value) {
    if (i > degree_) throw PreconditionError("coefficient index out of range");
    coeffs_[i] = std::move(value);
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::optional<unsigned> BinaryForm::support_degree_in_x2() const {
    for (unsigned i = degree_ + 1; i-- > 0;) {
        if (!coeffs_[i].is_zero()) return i;
    }
    return std::nullopt;
}

Rational BinaryForm::eval(const Rational& x1, const Rational& x2) const {
    // Horner over x2; each coefficient enters with its x1 power attached.
    Rational acc = coeffs_[degree_];
    for (unsigned i = degree_; i-- > 0;) {
        acc = acc * x2 + coeffs_[i] * x1.pow(degree_ - i);
    }
    return acc;
}

double BinaryForm::eval(double x1, double x2) const {
    double acc = 0;
    double p2 = 1;
    std::vector<double> p1(degree_ + 1);
    p1[0] = 1;
    for (unsigned i = 1; i <= degree_; ++i) p1[i] = p1[i - 1] * x1;
    for (unsigned i = 0; i <= degree_; ++i) {
        acc += coeffs_[i].to_double() * p1[degree_ - i] * p2;
        p2 *= x2;
    }
    return acc;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r(degree_);
    for (unsigned i = 0; i <= degree_; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
    BinaryForm r(degree_ + other.degree_);
    for (unsigned i = 0; i <= degree_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; j <= other.degree_; ++j) {
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return r;
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
    if (degree_ != other.degree_) {
        throw PreconditionError("degree mismatch in form addition");
    }
    BinaryForm r(degree_);
    for (unsigned i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& other) const {
    return *this + (-other);
}

BinaryForm BinaryForm::scaled(const Rational& s) const {
    BinaryForm r(degree_);
    for (unsigned i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i] * s;
    return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
    BinaryForm acc(0, {Rational(1)});
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

std::pair<Rational, BinaryForm> BinaryForm::primitive_part() const {
    if (is_zero()) return {Rational(0), *this};
    Int den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    Int num_gcd = 0;
    BinaryForm prim(degree_);
    for (unsigned i = 0; i <= degree_; ++i) {
        prim.coeffs_[i] = coeffs_[i] * Rational(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, prim.coeffs_[i].num());
    }
    Rational scale(num_gcd);
    for (unsigned i = 0; i <= degree_; ++i) {
        if (!prim.coeffs_[i].is_zero()) {
            if (prim.coeffs_[i].sign() < 0) scale = -scale;
            break;
        }
    }
    for (auto& c : prim.coeffs_) c /= scale;
    return {scale / Rational(den_lcm), prim};
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i <= degree_; ++i) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const unsigned e1 = degree_ - i;
        const unsigned e2 = i;
        const bool has_var = e1 + e2 > 0;
        if (!mag.is_one() || !has_var) {
            os << mag.pretty();
            if (has_var) os << "*";
        }
        if (e1 > 0) {
            os << "x1";
            if (e1 > 1) os << "^" << e1;
            if (e2 > 0) os << "*";
        }
        if (e2 > 0) {
            os << "x2";
            if (e2 > 1) os << "^" << e2;
        }
    }
    if (first) os << "0";
    return os.str();
}

LinearForm::LinearForm(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() && b_.is_zero()) {
        throw PreconditionError("zero linear form");
    }
}

BinaryForm LinearForm::as_form() const {
    return BinaryForm(1, {a_, b_});
}

std::pair<Rational, LinearForm> LinearForm::normalized() const {
    auto [content, prim] = as_form().primitive_part();
    return {content, LinearForm(prim.coeff(0), prim.coeff(1))};
}

std::string LinearForm::str() const {
    return as_form().str();
}

}  // namespace esing
