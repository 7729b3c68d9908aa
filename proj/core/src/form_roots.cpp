#include <algorithm>

#include "esing/binary_form.hpp"
#include "univariate.hpp"

namespace esing {

namespace {

/// f(t) = p(1, t): ascending coefficients, trailing zeros trimmed.
/// The degree deficit against p.degree() is the multiplicity of x1.
detail::UPoly dehomogenize(const BinaryForm& p) {
    detail::UPoly f(p.coeffs());
    detail::trim(f);
    return f;
}

/// Rebuilds a binary form of degree deg(f) from the t-polynomial f.
BinaryForm homogenize(const detail::UPoly& f) {
    const int d = detail::deg(f);
    if (d < 0) throw InternalError("homogenize of zero polynomial");
    BinaryForm p(static_cast<unsigned>(d));
    for (unsigned i = 0; i <= static_cast<unsigned>(d); ++i) p.set_coeff(i, f[i]);
    return p;
}

BinaryForm x1_form() {
    return BinaryForm(1, {Rational(1), Rational(0)});
}

/// Exact division of p by L; nullopt if L does not divide p.
std::optional<BinaryForm> try_divide(const BinaryForm& p, const LinearForm& L) {
    const unsigned k = p.degree();
    if (k == 0) return std::nullopt;
    if (L.b().is_zero()) {
        // L = a*x1: divisible iff the x2^k coefficient vanishes.
        if (!p.coeff(k).is_zero()) return std::nullopt;
        BinaryForm q(k - 1);
        for (unsigned i = 0; i < k; ++i) q.set_coeff(i, p.coeff(i) / L.a());
        return q;
    }
    // Synthetic division of p(1,t) by (a + b t), carried out on the full
    // coefficient list so vanishing leading coefficients need no care.
    BinaryForm q(k - 1);
    Rational carry = p.coeff(k) / L.b();
    q.set_coeff(k - 1, carry);
    for (unsigned i = k - 1; i-- > 0;) {
        carry = (p.coeff(i + 1) - carry * L.a()) / L.b();
        q.set_coeff(i, carry);
    }
    if (p.coeff(0) != q.coeff(0) * L.a()) return std::nullopt;
    return q;
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& p) {
    if (p.is_zero()) {
        throw PreconditionError("squarefree of zero form");
    }
    SquarefreeDecomposition out;
    detail::UPoly f = dehomogenize(p);
    const unsigned x1_mult = p.degree() - static_cast<unsigned>(detail::deg(f));

    if (detail::deg(f) >= 1) {
        detail::UPoly prim = detail::primitive(f);
        for (auto& [fac, mult] : detail::yun_squarefree(prim)) {
            // Yun normalizes by the leading coefficient; forms are kept
            // with the first nonzero coefficient positive instead.
            out.factors.push_back({homogenize(fac).primitive_part().second, mult});
        }
    }
    if (x1_mult >= 1) {
        out.factors.push_back({x1_form(), x1_mult});
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const SquarefreeFactor& x, const SquarefreeFactor& y) {
                  if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
                  if (x.factor.degree() != y.factor.degree()) {
                      return x.factor.degree() < y.factor.degree();
                  }
                  for (unsigned i = 0; i <= x.factor.degree(); ++i) {
                      if (x.factor.coeff(i) != y.factor.coeff(i)) {
                          return x.factor.coeff(i) < y.factor.coeff(i);
                      }
                  }
                  return false;
              });

    // Unit = ratio against the reconstructed product, verified exactly.
    BinaryForm prod(0, {Rational(1)});
    for (const auto& [fac, mult] : out.factors) prod = prod * fac.pow(mult);
    if (prod.degree() != p.degree()) {
        throw InternalError("squarefree decomposition lost degree");
    }
    auto lead = prod.support_degree_in_x2();
    out.unit = p.coeff(*lead) / prod.coeff(*lead);
    if (prod.scaled(out.unit) != p) {
        throw InternalError("squarefree decomposition does not multiply back");
    }
    return out;
}

bool has_real_projective_root(const BinaryForm& f) {
    if (f.is_zero()) {
        throw PreconditionError("real-root query on zero form");
    }
    auto support = f.support_degree_in_x2();
    if (*support < f.degree()) return true;  // x1 divides f, root at [0:1]
    detail::UPoly g = dehomogenize(f);
    return detail::count_real_roots_squarefree(g) >= 1;
}

unsigned m_circle(const BinaryForm& p) {
    const auto dec = squarefree_decomposition(p);
    unsigned best = 0;
    for (const auto& [factor, mult] : dec.factors) {
        if (mult > best && has_real_projective_root(factor)) best = mult;
    }
    return best;
}

std::optional<unsigned> linear_factor_multiplicity(const LinearForm& L, const BinaryForm& p) {
    if (p.is_zero()) return std::nullopt;  // infinite
    unsigned m = 0;
    BinaryForm rest = p;
    while (rest.degree() >= 1) {
        auto q = try_divide(rest, L);
        if (!q) break;
        rest = std::move(*q);
        ++m;
    }
    return m;
}

std::optional<std::pair<Rational, LinearForm>> extract_perfect_cube(const BinaryForm& p) {
    if (p.degree() != 3 || p.is_zero()) {
        throw PreconditionError("perfect-cube extraction needs a nonzero degree-3 form");
    }
    std::optional<LinearForm> candidate;
    if (!p.coeff(0).is_zero()) {
        // c*(x1 + (c1/3c0)*x2)^3 is the only possible shape.
        candidate = LinearForm(Rational(1), p.coeff(1) / (Rational(3) * p.coeff(0)));
    } else if (p.coeff(1).is_zero() && p.coeff(2).is_zero()) {
        candidate = LinearForm(Rational(0), Rational(1));
    } else {
        return std::nullopt;
    }
    auto [scale, L] = candidate->normalized();
    (void)scale;
    BinaryForm cube = L.as_form().pow(3);
    auto lead = cube.support_degree_in_x2();
    Rational c = p.coeff(*lead) / cube.coeff(*lead);
    if (cube.scaled(c) != p) return std::nullopt;
    return std::make_pair(c, L);
}

BinaryForm form_gcd(const BinaryForm& p, const BinaryForm& q) {
    if (p.is_zero() && q.is_zero()) {
        throw PreconditionError("gcd of two zero forms");
    }
    if (p.is_zero()) return q.primitive_part().second;
    if (q.is_zero()) return p.primitive_part().second;
    detail::UPoly fp = dehomogenize(p);
    detail::UPoly fq = dehomogenize(q);
    const unsigned ep = p.degree() - static_cast<unsigned>(detail::deg(fp));
    const unsigned eq = q.degree() - static_cast<unsigned>(detail::deg(fq));
    detail::UPoly g = detail::gcd(fp, fq);
    BinaryForm result = homogenize(g);
    const unsigned e = std::min(ep, eq);
    if (e > 0) result = result * x1_form().pow(e);
    return result.primitive_part().second;
}

}  // namespace esing
