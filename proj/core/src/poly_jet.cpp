#include "esing/poly_jet.hpp"

#include <algorithm>
#include <sstream>

namespace esing {

namespace {
const Rational kZero(0);
}

const Rational& PolyJet::coeff(unsigned i, unsigned j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? kZero : it->second;
}

void PolyJet::set_coeff(unsigned i, unsigned j, Rational value) {
    if (i + j > order_) {
        throw PreconditionError("jet coefficient beyond truncation order");
    }
    if (value.is_zero()) {
        coeffs_.erase({i, j});
    } else {
        coeffs_[{i, j}] = std::move(value);
    }
}

void PolyJet::add_coeff(unsigned i, unsigned j, const Rational& value) {
    if (value.is_zero()) return;
    if (i + j > order_) {
        throw PreconditionError("jet coefficient beyond truncation order");
    }
    auto [it, inserted] = coeffs_.try_emplace({i, j}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

unsigned PolyJet::support_degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : coeffs_) d = std::max(d, key.first + key.second);
    return d;
}

unsigned PolyJet::max_x2_degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : coeffs_) d = std::max(d, key.second);
    return d;
}

PolyJet PolyJet::truncated(unsigned new_order) const {
    PolyJet r(new_order);
    for (const auto& [key, c] : coeffs_) {
        if (key.first + key.second <= new_order) r.coeffs_[key] = c;
    }
    return r;
}

PolyJet PolyJet::lifted(unsigned new_order) const {
    if (new_order < order_) {
        throw PreconditionError("lifted() cannot lower the order");
    }
    PolyJet r(new_order);
    r.coeffs_ = coeffs_;
    return r;
}

PolyJet PolyJet::operator-() const {
    PolyJet r(order_);
    for (const auto& [key, c] : coeffs_) r.coeffs_[key] = -c;
    return r;
}

PolyJet PolyJet::operator+(const PolyJet& o) const {
    PolyJet r = truncated(std::min(order_, o.order_));
    for (const auto& [key, c] : o.coeffs_) {
        if (key.first + key.second <= r.order_) r.add_coeff(key.first, key.second, c);
    }
    return r;
}

PolyJet PolyJet::operator-(const PolyJet& o) const {
    return *this + (-o);
}

PolyJet PolyJet::operator*(const PolyJet& o) const {
    const unsigned out_order = std::min(order_, o.order_);
    PolyJet r(out_order);
    for (const auto& [ka, ca] : coeffs_) {
        const unsigned da = ka.first + ka.second;
        if (da > out_order) continue;
        for (const auto& [kb, cb] : o.coeffs_) {
            if (da + kb.first + kb.second > out_order) continue;
            r.add_coeff(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

PolyJet PolyJet::scaled(const Rational& s) const {
    PolyJet r(order_);
    if (s.is_zero()) return r;
    for (const auto& [key, c] : coeffs_) r.coeffs_[key] = c * s;
    return r;
}

PolyJet PolyJet::times_monomial(unsigned i0, unsigned j0) const {
    PolyJet r(order_ + i0 + j0);
    for (const auto& [key, c] : coeffs_) {
        r.coeffs_[{key.first + i0, key.second + j0}] = c;
    }
    return r;
}

PolyJet PolyJet::x2_shifted_down(unsigned k) const {
    PolyJet r(order_ >= k ? order_ - k : 0);
    for (const auto& [key, c] : coeffs_) {
        if (key.second >= k) r.set_coeff(key.first, key.second - k, c);
    }
    return r;
}

std::vector<Rational> PolyJet::x2_row(unsigned j, unsigned len) const {
    std::vector<Rational> row(len);
    for (const auto& [key, c] : coeffs_) {
        if (key.second == j && key.first < len) row[key.first] = c;
    }
    return row;
}

PolyJet PolyJet::d2() const {
    PolyJet r(order_ > 0 ? order_ - 1 : 0);
    for (const auto& [key, c] : coeffs_) {
        if (key.second == 0) continue;
        r.set_coeff(key.first, key.second - 1, c * Rational(key.second));
    }
    return r;
}

Rational PolyJet::eval(const Rational& x1, const Rational& x2) const {
    Rational acc(0);
    for (const auto& [key, c] : coeffs_) {
        acc += c * x1.pow(key.first) * x2.pow(key.second);
    }
    return acc;
}

double PolyJet::eval(double x1, double x2) const {
    double acc = 0;
    for (const auto& [key, c] : coeffs_) {
        double t = c.to_double();
        for (unsigned k = 0; k < key.first; ++k) t *= x1;
        for (unsigned k = 0; k < key.second; ++k) t *= x2;
        acc += t;
    }
    return acc;
}

std::string PolyJet::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : coeffs_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational mag = c.abs();
        const bool has_var = key.first + key.second > 0;
        if (!mag.is_one() || !has_var) {
            os << mag.pretty();
            if (has_var) os << "*";
        }
        if (key.first > 0) {
            os << "x1";
            if (key.first > 1) os << "^" << key.first;
            if (key.second > 0) os << "*";
        }
        if (key.second > 0) {
            os << "x2";
            if (key.second > 1) os << "^" << key.second;
        }
    }
    return os.str();
}

// ---- PolyMap2 ----------------------------------------------------------

PolyMap2::PolyMap2(PolyJet comp1, PolyJet comp2)
    : comp1_(std::move(comp1)), comp2_(std::move(comp2)) {
    if (!comp1_.coeff(0, 0).is_zero() || !comp2_.coeff(0, 0).is_zero()) {
        throw PreconditionError("coordinate map must have zero constant term");
    }
}

PolyMap2 PolyMap2::identity(unsigned order) {
    return linear({Rational(1), Rational(0), Rational(0), Rational(1)}, order);
}

PolyMap2 PolyMap2::linear(const std::array<Rational, 4>& m, unsigned order) {
    PolyJet c1(order);
    PolyJet c2(order);
    c1.set_coeff(1, 0, m[0]);
    c1.set_coeff(0, 1, m[1]);
    c2.set_coeff(1, 0, m[2]);
    c2.set_coeff(0, 1, m[3]);
    return PolyMap2(std::move(c1), std::move(c2));
}

unsigned PolyMap2::order() const {
    return std::min(comp1_.order(), comp2_.order());
}

std::array<Rational, 4> PolyMap2::linear_part() const {
    return {comp1_.coeff(1, 0), comp1_.coeff(0, 1), comp2_.coeff(1, 0), comp2_.coeff(0, 1)};
}

Rational PolyMap2::linear_determinant() const {
    auto m = linear_part();
    return m[0] * m[3] - m[1] * m[2];
}

bool PolyMap2::is_invertible_linear_part() const {
    return !linear_determinant().is_zero();
}

bool PolyMap2::is_linear() const {
    return comp1_.support_degree() <= 1 && comp2_.support_degree() <= 1;
}

// ---- substitution ------------------------------------------------------

namespace {

/// Composition with a purely linear map, degree by degree: each homogeneous
/// part transforms through precomputed powers of the two image lines.
PolyJet substitute_linear(const PolyJet& jet, const PolyMap2& map, unsigned out_order) {
    const auto m = map.linear_part();
    std::vector<BinaryForm> l1_pows;
    std::vector<BinaryForm> l2_pows;
    l1_pows.reserve(out_order + 1);
    l2_pows.reserve(out_order + 1);
    l1_pows.emplace_back(0u, std::vector<Rational>{Rational(1)});
    l2_pows.emplace_back(0u, std::vector<Rational>{Rational(1)});
    const BinaryForm l1(1, {m[0], m[1]});
    const BinaryForm l2(1, {m[2], m[3]});
    for (unsigned k = 1; k <= out_order; ++k) {
        l1_pows.push_back(l1_pows.back() * l1);
        l2_pows.push_back(l2_pows.back() * l2);
    }
    PolyJet out(out_order);
    for (const auto& [key, c] : jet.terms()) {
        const unsigned i = key.first;
        const unsigned j = key.second;
        if (i + j > out_order) continue;
        const BinaryForm image = l1_pows[i] * l2_pows[j];  // degree i+j
        for (unsigned t = 0; t <= image.degree(); ++t) {
            if (!image.coeff(t).is_zero()) {
                out.add_coeff(image.degree() - t, t, c * image.coeff(t));
            }
        }
    }
    return out;
}

}  // namespace

PolyJet substitute(const PolyJet& jet, const PolyMap2& map) {
    const unsigned out_order = std::min(jet.order(), map.order());
    if (map.is_linear()) {
        return substitute_linear(jet, map, out_order);
    }
    const PolyJet u = map.comp1().truncated(out_order);
    const PolyJet v = map.comp2().truncated(out_order);

    unsigned max_i = 0;
    unsigned max_j = 0;
    for (const auto& [key, c] : jet.terms()) {
        if (key.first + key.second > out_order) continue;
        max_i = std::max(max_i, key.first);
        max_j = std::max(max_j, key.second);
    }
    std::vector<PolyJet> u_pows;
    std::vector<PolyJet> v_pows;
    u_pows.reserve(max_i + 1);
    v_pows.reserve(max_j + 1);
    PolyJet one(out_order);
    one.set_coeff(0, 0, Rational(1));
    u_pows.push_back(one);
    v_pows.push_back(one);
    for (unsigned k = 1; k <= max_i; ++k) u_pows.push_back(u_pows.back() * u);
    for (unsigned k = 1; k <= max_j; ++k) v_pows.push_back(v_pows.back() * v);

    PolyJet out(out_order);
    for (const auto& [key, c] : jet.terms()) {
        if (key.first + key.second > out_order) continue;
        PolyJet term = u_pows[key.first] * v_pows[key.second];
        for (const auto& [tkey, tc] : term.terms()) {
            out.add_coeff(tkey.first, tkey.second, c * tc);
        }
    }
    return out;
}

PolyMap2 invert_linear(const PolyMap2& map) {
    if (!map.is_linear()) {
        throw PreconditionError("invert_linear needs a purely linear map");
    }
    const Rational det = map.linear_determinant();
    if (det.is_zero()) {
        throw PreconditionError("singular matrix");
    }
    const auto m = map.linear_part();
    return PolyMap2::linear({m[3] / det, -m[1] / det, -m[2] / det, m[0] / det}, map.order());
}

PolyMap2 compose(const PolyMap2& a, const PolyMap2& b) {
    return PolyMap2(substitute(a.comp1(), b), substitute(a.comp2(), b));
}

BinaryForm homogeneous_part(const PolyJet& jet, unsigned k) {
    if (k > jet.order()) {
        throw PreconditionError("homogeneous part beyond jet order");
    }
    BinaryForm p(k);
    for (unsigned i = 0; i <= k; ++i) {
        p.set_coeff(i, jet.coeff(k - i, i));
    }
    return p;
}

PolyJet jet_from_form(const BinaryForm& form, unsigned order) {
    if (form.degree() > order) {
        throw PreconditionError("form degree exceeds jet order");
    }
    PolyJet jet(order);
    const unsigned k = form.degree();
    for (unsigned i = 0; i <= k; ++i) {
        jet.set_coeff(k - i, i, form.coeff(i));
    }
    return jet;
}

const char* step_name(StepKind kind) {
    switch (kind) {
        case StepKind::rotate_p3: return "rotate_p3";
        case StepKind::shear_E6: return "shear_E6";
        case StepKind::qshear_E7: return "qshear_E7";
        case StepKind::shear_E7b: return "shear_E7b";
        case StepKind::qshear_E8: return "qshear_E8";
        case StepKind::shear_E8b: return "shear_E8b";
        case StepKind::translate_branch: return "translate_branch";
    }
    throw InternalError("unknown step kind");
}

StepKind step_kind_from_name(const std::string& name) {
    for (StepKind k : {StepKind::rotate_p3, StepKind::shear_E6, StepKind::qshear_E7,
                       StepKind::shear_E7b, StepKind::qshear_E8, StepKind::shear_E8b,
                       StepKind::translate_branch}) {
        if (name == step_name(k)) return k;
    }
    throw PreconditionError("unknown transform step name: " + name);
}

}  // namespace esing
