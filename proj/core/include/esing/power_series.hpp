#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esing/poly_jet.hpp"
#include "esing/rational.hpp"

namespace esing {

/// Truncated univariate series a_0 + a_1 x1 + ... + a_W x1^W. Arithmetic
/// truncates at the smaller order of the operands.
class PowerSeries1 {
  public:
    explicit PowerSeries1(unsigned order) : coeffs_(order + 1) {}
    PowerSeries1(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& coeff(unsigned k) const;
    void set_coeff(unsigned k, Rational value);

    bool is_zero() const;

    PowerSeries1 operator-() const;
    PowerSeries1 operator+(const PowerSeries1& o) const;
    PowerSeries1 operator-(const PowerSeries1& o) const;
    PowerSeries1 operator*(const PowerSeries1& o) const;
    PowerSeries1 scaled(const Rational& s) const;

    /// Multiplies by x1^k; the top k coefficients fall off the truncation.
    PowerSeries1 shifted_up(unsigned k) const;
    /// Divides by x1^k. Throws PreconditionError unless the low k
    /// coefficients vanish; the order drops by k.
    PowerSeries1 shifted_down(unsigned k) const;

    PowerSeries1 truncated(unsigned new_order) const;
    /// Declares the series exact as a polynomial and raises the order.
    PowerSeries1 lifted(unsigned new_order) const;

    double eval(double x) const;

    friend bool operator==(const PowerSeries1& a, const PowerSeries1& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
};

/// Index of the first nonzero coefficient; nullopt (read: "infinite", or
/// ">= order+1" under truncation) when every retained coefficient is zero.
std::optional<unsigned> vanishing_order(const PowerSeries1& s);

/// f(x1, s(x1)) as a series of the given order. Requires s(0) = 0 so every
/// retained output coefficient is exact; f is treated as an exact
/// polynomial when order exceeds f.order().
PowerSeries1 jet_eval_series(const PolyJet& f, const PowerSeries1& s, unsigned order);

/// The jet of s(x1) itself (x2-degree zero rows only).
PolyJet jet_from_series(const PowerSeries1& s, unsigned order);

}  // namespace esing
