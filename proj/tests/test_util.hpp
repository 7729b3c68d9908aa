#pragma once

// Shared deterministic generators and numeric oracles for property tests.
// Everything draws from an explicitly seeded mt19937_64 so failures
// reproduce.

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "esing/binary_form.hpp"
#include "esing/poly_jet.hpp"
#include "esing/rational.hpp"

namespace testutil {

using esing::BinaryForm;
using esing::PolyJet;
using esing::Rational;

inline long long rand_int(std::mt19937_64& gen, long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& gen, long long num_mag = 9, long long den_max = 4) {
    return Rational(esing::Int(rand_int(gen, -num_mag, num_mag)),
                    esing::Int(rand_int(gen, 1, den_max)));
}

inline Rational rand_nonzero_rational(std::mt19937_64& gen, long long num_mag = 9,
                                      long long den_max = 4) {
    for (;;) {
        Rational r = rand_rational(gen, num_mag, den_max);
        if (!r.is_zero()) return r;
    }
}

inline BinaryForm rand_form(std::mt19937_64& gen, unsigned degree, bool ensure_nonzero = true) {
    for (;;) {
        BinaryForm p(degree);
        for (unsigned i = 0; i <= degree; ++i) {
            if (gen() % 4 != 0) p.set_coeff(i, rand_rational(gen));
        }
        if (!ensure_nonzero || !p.is_zero()) return p;
    }
}

inline BinaryForm rand_form_full_degree(std::mt19937_64& gen, unsigned degree) {
    BinaryForm p = rand_form(gen, degree);
    while (p.coeff(degree).is_zero()) p.set_coeff(degree, rand_rational(gen));
    while (p.coeff(0).is_zero()) p.set_coeff(0, rand_rational(gen));
    return p;
}

inline PolyJet rand_jet(std::mt19937_64& gen, unsigned order, unsigned min_degree = 0) {
    PolyJet jet(order);
    for (unsigned i = 0; i <= order; ++i) {
        for (unsigned j = 0; i + j <= order; ++j) {
            if (i + j < min_degree) continue;
            if (gen() % 3 == 0) jet.set_coeff(i, j, rand_rational(gen, 5, 3));
        }
    }
    return jet;
}

inline std::array<Rational, 4> rand_invertible_matrix(std::mt19937_64& gen, long long mag = 3) {
    for (;;) {
        std::array<Rational, 4> m = {Rational(rand_int(gen, -mag, mag)),
                                     Rational(rand_int(gen, -mag, mag)),
                                     Rational(rand_int(gen, -mag, mag)),
                                     Rational(rand_int(gen, -mag, mag))};
        if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return m;
    }
}

/// Random germ with a degenerate critical origin and m_S1(p3) = 3, built in
/// rotated position (cubic part c*x2^3) and then optionally scrambled by a
/// random linear change. The quartic/quintic structure selects the type:
/// kind 6 -> E6, 7 -> E7, 8 -> E8.
inline PolyJet rand_e_type_jet(std::mt19937_64& gen, int kind, unsigned order,
                               bool scramble = false) {
    PolyJet jet(order);
    jet.set_coeff(0, 3, rand_nonzero_rational(gen, 4, 2));
    // Quartic part: let x2 divide it exactly (kind-6: 0, kind-7: >= 1,
    // kind-8: >= 2) times, then pin the coefficient the type hinges on.
    const unsigned min_j = kind == 6 ? 0u : (kind == 7 ? 1u : 2u);
    for (unsigned j = min_j; j <= 4; ++j) {
        if (gen() % 2 == 0) jet.set_coeff(4 - j, j, rand_rational(gen, 3, 2));
    }
    // Quintic part; kind-8 keeps the pure x1^5 coefficient for last.
    for (unsigned j = kind == 8 ? 1u : 0u; j <= 5; ++j) {
        if (gen() % 2 == 0) jet.set_coeff(5 - j, j, rand_rational(gen, 3, 2));
    }
    if (kind == 6) {
        jet.set_coeff(4, 0, rand_nonzero_rational(gen, 4, 2));
    } else if (kind == 7) {
        jet.set_coeff(3, 1, rand_nonzero_rational(gen, 4, 2));
    } else {
        jet.set_coeff(5, 0, rand_nonzero_rational(gen, 4, 2));
    }
    for (unsigned d = 6; d <= order; ++d) {
        for (unsigned i = 0; i <= d; ++i) {
            if (gen() % 3 == 0) jet.set_coeff(i, d - i, rand_rational(gen, 3, 2));
        }
    }
    if (scramble) {
        jet = substitute(jet, esing::PolyMap2::linear(rand_invertible_matrix(gen), order));
    }
    return jet;
}

/// Complex roots of the dehomogenization p(1,t) by Durand-Kerner iteration.
/// A double-precision oracle, independent of the exact elimination path.
inline std::vector<std::complex<double>> durand_kerner_roots(const BinaryForm& p) {
    const unsigned d = p.degree();
    std::vector<std::complex<double>> a(d + 1);
    for (unsigned i = 0; i <= d; ++i) a[i] = p.coeff(i).to_double();
    std::vector<std::complex<double>> z(d);
    const std::complex<double> w(0.4, 0.9);
    std::complex<double> acc(1, 0);
    for (unsigned k = 0; k < d; ++k) {
        acc *= w;
        z[k] = acc;
    }
    auto eval = [&a](std::complex<double> t) {
        std::complex<double> s = 0;
        for (unsigned i = a.size(); i-- > 0;) s = s * t + a[i];
        return s;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (unsigned k = 0; k < d; ++k) {
            std::complex<double> denom = a[d];
            for (unsigned j = 0; j < d; ++j) {
                if (j != k) denom *= z[k] - z[j];
            }
            const std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

/// lc(p)^deg(q) * prod q(roots of p), signed to match the ascending-row
/// Sylvester convention.
inline double resultant_root_oracle(const BinaryForm& p, const BinaryForm& q) {
    const auto roots = durand_kerner_roots(p);
    std::complex<double> prod = 1;
    for (const auto& r : roots) {
        std::complex<double> qv = 0;
        for (unsigned k = q.degree() + 1; k-- > 0;) qv = qv * r + q.coeff(k).to_double();
        prod *= qv;
    }
    double scale = 1;
    const double lead = p.coeff(p.degree()).to_double();
    for (unsigned k = 0; k < q.degree(); ++k) scale *= lead;
    const double sign = (p.degree() * q.degree()) % 2 == 0 ? 1.0 : -1.0;
    return sign * scale * prod.real();
}

}  // namespace testutil
