#include <vector>

#include "esing/binary_form.hpp"

namespace esing {

namespace {

/// Fraction-free Bareiss determinant of a square integer matrix.
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;  // whole pivot column vanished
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Least common multiple of the coefficient denominators.
Int denominator_lcm(const BinaryForm& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) {
        if (!c.is_zero()) l = boost::multiprecision::lcm(l, c.den());
    }
    return l;
}

}  // namespace

Rational resultant(const BinaryForm& p, const BinaryForm& q) {
    if (p.is_zero() || q.is_zero()) {
        throw PreconditionError("resultant of a zero form");
    }
    const unsigned m = p.degree();
    const unsigned n = q.degree();
    if (m < 1 || n < 1) {
        throw PreconditionError("resultant needs degrees >= 1");
    }

    // Clear denominators row-block-wise; undo the scaling on the result.
    const Int lp = denominator_lcm(p);
    const Int lq = denominator_lcm(q);
    std::vector<Int> pi(m + 1);
    std::vector<Int> qi(n + 1);
    for (unsigned i = 0; i <= m; ++i) {
        pi[i] = p.coeff(i).num() * (lp / p.coeff(i).den());
    }
    for (unsigned i = 0; i <= n; ++i) {
        qi[i] = q.coeff(i).num() * (lq / q.coeff(i).den());
    }

    // Sylvester matrix over the full homogeneous coefficient lists, one row
    // per shift, coefficients ascending in the x2 exponent.
    const size_t size = m + n;
    std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned i = 0; i <= m; ++i) syl[r][r + i] = pi[i];
    }
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned i = 0; i <= n; ++i) syl[n + r][r + i] = qi[i];
    }

    const Int det = bareiss_determinant(std::move(syl));
    Int scale = 1;
    for (unsigned i = 0; i < n; ++i) scale *= lp;
    for (unsigned i = 0; i < m; ++i) scale *= lq;
    return Rational(det, scale);
}

}  // namespace esing
