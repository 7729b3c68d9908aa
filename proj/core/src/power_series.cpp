#include "esing/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace esing {

PowerSeries1::PowerSeries1(unsigned order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw PreconditionError("series needs order+1 coefficients");
    }
}

const Rational& PowerSeries1::coeff(unsigned k) const {
    if (k >= coeffs_.size()) throw PreconditionError("series coefficient out of range");
    return coeffs_[k];
}

void PowerSeries1::set_coeff(unsigned k, Rational value) {
    if (k >= coeffs_.size()) throw PreconditionError("series coefficient out of range");
    coeffs_[k] = std::move(value);
}

bool PowerSeries1::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

PowerSeries1 PowerSeries1::operator-() const {
    PowerSeries1 r(order());
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator+(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order(), o.order()));
    for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator-(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order(), o.order()));
    for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator*(const PowerSeries1& o) const {
    PowerSeries1 r(std::min(order(), o.order()));
    const size_t n = r.coeffs_.size();
    for (size_t i = 0; i < n && i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n && j < o.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

PowerSeries1 PowerSeries1::scaled(const Rational& s) const {
    PowerSeries1 r(order());
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
    return r;
}

PowerSeries1 PowerSeries1::shifted_up(unsigned k) const {
    PowerSeries1 r(order());
    for (size_t i = 0; i + k < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

PowerSeries1 PowerSeries1::shifted_down(unsigned k) const {
    if (k > order()) throw PreconditionError("series shift below order zero");
    for (unsigned i = 0; i < k; ++i) {
        if (!coeffs_[i].is_zero()) {
            throw PreconditionError("series not divisible by the requested x1 power");
        }
    }
    PowerSeries1 r(order() - k);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i + k];
    return r;
}

PowerSeries1 PowerSeries1::truncated(unsigned new_order) const {
    PowerSeries1 r(new_order);
    for (size_t k = 0; k < r.coeffs_.size() && k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::lifted(unsigned new_order) const {
    if (new_order < order()) throw PreconditionError("lifted() cannot lower the order");
    return truncated(new_order);
}

double PowerSeries1::eval(double x) const {
    double acc = 0;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * x + coeffs_[k].to_double();
    }
    return acc;
}

std::string PowerSeries1::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << coeffs_[k].pretty();
    }
    os << "]";
    return os.str();
}

std::optional<unsigned> vanishing_order(const PowerSeries1& s) {
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (!s.coeff(k).is_zero()) return k;
    }
    return std::nullopt;
}

PowerSeries1 jet_eval_series(const PolyJet& f, const PowerSeries1& s, unsigned order) {
    if (!s.coeff(0).is_zero()) {
        throw PreconditionError("series substitution needs s(0) = 0");
    }
    const PowerSeries1 st = s.order() == order ? s : s.truncated(order);
    const unsigned jmax = f.max_x2_degree();
    PowerSeries1 acc(order, f.x2_row(jmax, order + 1));
    for (unsigned j = jmax; j-- > 0;) {
        acc = acc * st + PowerSeries1(order, f.x2_row(j, order + 1));
    }
    return acc;
}

PolyJet jet_from_series(const PowerSeries1& s, unsigned order) {
    PolyJet jet(order);
    for (unsigned k = 0; k <= std::min(order, s.order()); ++k) {
        jet.set_coeff(k, 0, s.coeff(k));
    }
    return jet;
}

}  // namespace esing
