#pragma once

// Internal helpers: dense univariate polynomials over Rational with
// ascending coefficients. Only what the binary-form operations need:
// exact division, primitive-part gcd, Yun square-free splitting and Sturm
// sign-variation counting. Not installed.

#include <utility>
#include <vector>

#include "esing/errors.hpp"
#include "esing/rational.hpp"

namespace esing::detail {

using UPoly = std::vector<Rational>;  // ascending, may carry zero leading coeffs

inline void trim(UPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int deg(const UPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (!f[static_cast<size_t>(i)].is_zero()) return i;
    }
    return -1;
}

inline bool is_zero(const UPoly& f) { return deg(f) < 0; }

inline UPoly derivative(const UPoly& f) {
    UPoly d;
    for (size_t i = 1; i < f.size(); ++i) {
        d.push_back(f[i] * Rational(static_cast<long long>(i)));
    }
    trim(d);
    return d;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    trim(c);
    return c;
}

inline UPoly sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

/// Quotient and remainder of a by b, exact rational long division.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    const int db = deg(b);
    if (db < 0) throw PreconditionError("univariate division by zero");
    trim(a);
    int da = deg(a);
    if (da < db) return {{}, std::move(a)};
    UPoly q(static_cast<size_t>(da - db) + 1);
    const Rational lead = b[static_cast<size_t>(db)];
    while ((da = deg(a)) >= db) {
        const size_t shift = static_cast<size_t>(da - db);
        Rational c = a[static_cast<size_t>(da)] / lead;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) {
            a[shift + static_cast<size_t>(i)] -= c * b[static_cast<size_t>(i)];
        }
    }
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
}

inline UPoly div_exact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!is_zero(r)) throw InternalError("univariate division expected to be exact");
    return q;
}

/// Rescales to coprime integer coefficients with positive leading
/// coefficient. Zero polynomial maps to itself.
inline UPoly primitive(UPoly f) {
    trim(f);
    if (f.empty()) return f;
    Int den_lcm = 1;
    for (const auto& c : f) {
        if (!c.is_zero()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    Int num_gcd = 0;
    for (auto& c : f) {
        c *= Rational(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, c.num());
    }
    Rational scale(num_gcd);
    if (f.back().sign() < 0) scale = -scale;
    for (auto& c : f) c /= scale;
    return f;
}

/// Primitive gcd with positive leading coefficient; gcd(0, f) = primitive(f).
inline UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = primitive(std::move(r));  // keeps coefficient growth in check
    }
    return primitive(std::move(a));
}

/// Yun's square-free decomposition of a primitive polynomial of degree >= 1:
/// returns (factor, multiplicity) pairs with primitive pairwise-coprime
/// square-free factors whose weighted product is f up to sign.
inline std::vector<std::pair<UPoly, unsigned>> yun_squarefree(const UPoly& f) {
    std::vector<std::pair<UPoly, unsigned>> out;
    UPoly df = derivative(f);
    UPoly g = gcd(f, df);
    UPoly c = div_exact(f, g);
    UPoly d = sub(div_exact(df, g), derivative(c));
    for (unsigned i = 1; deg(c) > 0; ++i) {
        UPoly a = gcd(c, d);
        if (deg(a) > 0) out.emplace_back(a, i);
        c = div_exact(c, a);
        d = sub(div_exact(d, a), derivative(c));
    }
    return out;
}

/// Rescales to integer coefficients by a positive rational only, so sign
/// patterns survive (what a Sturm chain needs; primitive() would not do).
inline UPoly scaled_integral(UPoly f) {
    trim(f);
    if (f.empty()) return f;
    Int den_lcm = 1;
    for (const auto& c : f) {
        if (!c.is_zero()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    }
    Int num_gcd = 0;
    for (auto& c : f) {
        c *= Rational(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, c.num());
    }
    for (auto& c : f) c /= Rational(num_gcd);
    return f;
}

/// Number of distinct real roots of a square-free polynomial, by counting
/// Sturm-chain sign variations at -inf and +inf.
inline unsigned count_real_roots_squarefree(const UPoly& f) {
    const int d = deg(f);
    if (d <= 0) return 0;
    std::vector<UPoly> chain;
    chain.push_back(scaled_integral(f));
    chain.push_back(scaled_integral(derivative(f)));
    while (deg(chain.back()) > 0) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        if (is_zero(r)) break;  // cannot happen for square-free input
        for (auto& cc : r) cc = -cc;
        chain.push_back(scaled_integral(std::move(r)));
    }
    auto variations = [&chain](int at_infinity_sign) {
        unsigned v = 0;
        int prev = 0;
        for (const auto& p : chain) {
            const int dp = deg(p);
            if (dp < 0) continue;
            int s = p[static_cast<size_t>(dp)].sign();
            if (at_infinity_sign < 0 && (dp % 2 == 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(-1) - variations(+1);
}

}  // namespace esing::detail
