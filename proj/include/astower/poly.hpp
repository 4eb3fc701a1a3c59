#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "astower/natural.hpp"
#include "astower/tower.hpp"

namespace astower {

class DegreeBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense polynomial over one tower level (-1 means F_p coefficients),
// lowest degree first, trimmed so the leading coefficient is nonzero.
class DensePoly {
public:
    explicit DensePoly(int level) : level_(level) {}

    DensePoly(int level, std::vector<TowerElement> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.level() != level_)
                throw std::invalid_argument("DensePoly: coefficient level mismatch");
        trim();
    }

    int level() const { return level_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<TowerElement>& coeffs() const { return coeffs_; }

    const TowerElement& leading() const {
        if (coeffs_.empty())
            throw std::logic_error("DensePoly::leading: zero polynomial");
        return coeffs_.back();
    }

    friend bool operator==(const DensePoly& f, const DensePoly& g) {
        return f.level_ == g.level_ && f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const DensePoly& f, const DensePoly& g) { return !(f == g); }

private:
    int level_;
    std::vector<TowerElement> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
};

inline DensePoly poly_from_residues(const TowerContext& ctx, const std::vector<unsigned>& residues) {
    std::vector<TowerElement> coeffs;
    coeffs.reserve(residues.size());
    for (unsigned r : residues)
        coeffs.push_back(ctx.from_residue(r, -1));
    return DensePoly(-1, std::move(coeffs));
}

inline DensePoly poly_add(const TowerContext& ctx, const DensePoly& f, const DensePoly& g) {
    if (f.level() != g.level())
        throw std::invalid_argument("poly_add: level mismatch");
    std::vector<TowerElement> out(std::max(f.coeffs().size(), g.coeffs().size()),
                                  ctx.zero(f.level()));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        out[k] = f.coeffs()[k];
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
        out[k] = ctx.add(out[k], g.coeffs()[k]);
    return DensePoly(f.level(), std::move(out));
}

inline DensePoly poly_mul(const TowerContext& ctx, const DensePoly& f, const DensePoly& g) {
    if (f.level() != g.level())
        throw std::invalid_argument("poly_mul: level mismatch");
    if (f.is_zero() || g.is_zero())
        return DensePoly(f.level());
    std::vector<TowerElement> out(f.coeffs().size() + g.coeffs().size() - 1, ctx.zero(f.level()));
    for (std::size_t a = 0; a < f.coeffs().size(); ++a) {
        if (f.coeffs()[a].is_zero())
            continue;
        for (std::size_t b = 0; b < g.coeffs().size(); ++b)
            out[a + b] = ctx.add(out[a + b], ctx.mul(f.coeffs()[a], g.coeffs()[b]));
    }
    return DensePoly(f.level(), std::move(out));
}

// f(g(X)), Horner over polynomials.
inline DensePoly poly_compose(const TowerContext& ctx, const DensePoly& f, const DensePoly& g) {
    if (f.level() != g.level())
        throw std::invalid_argument("poly_compose: level mismatch");
    DensePoly acc(f.level());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = poly_mul(ctx, acc, g);
        acc = poly_add(ctx, acc, DensePoly(f.level(), {f.coeffs()[k]}));
    }
    return acc;
}

// Evaluate f at x, x living at f.level() or above (coefficients embed up).
inline TowerElement poly_eval(const TowerContext& ctx, const DensePoly& f, const TowerElement& x) {
    if (x.level() < f.level())
        throw std::invalid_argument("poly_eval: point below coefficient level");
    TowerElement acc = ctx.zero(x.level());
    for (std::size_t k = f.coeffs().size(); k-- > 0;)
        acc = ctx.add(ctx.mul(acc, x), ctx.embed(f.coeffs()[k], x.level()));
    return acc;
}

// X^k at a given level, handy for building moduli.
inline DensePoly poly_monomial(const TowerContext& ctx, int level, unsigned k, unsigned residue = 1) {
    std::vector<TowerElement> coeffs(k + 1, ctx.zero(level));
    coeffs[k] = ctx.from_residue(residue, level);
    return DensePoly(level, std::move(coeffs));
}

// Minimal polynomial of x over F_p as the product of the linear factors over
// the Frobenius orbit {x, x^p, x^{p^2}, ...}, detected by return to the
// start. The orbit length divides p^{level+1}; the budget caps it.
inline DensePoly minimal_polynomial(const TowerContext& ctx, const TowerElement& x,
                                    unsigned degree_budget = 128) {
    std::vector<TowerElement> orbit{x};
    TowerElement y = ctx.frobenius(x);
    while (y != x) {
        orbit.push_back(y);
        if (orbit.size() > degree_budget)
            throw DegreeBudgetExceeded("minimal_polynomial: orbit exceeds degree budget of " +
                                       std::to_string(degree_budget));
        y = ctx.frobenius(y);
    }
    const int level = x.level();
    std::vector<TowerElement> poly{ctx.one(level)};
    for (const TowerElement& beta : orbit) {
        std::vector<TowerElement> next(poly.size() + 1, ctx.zero(level));
        const TowerElement neg_beta = ctx.neg(beta);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = ctx.add(next[k + 1], poly[k]);
            next[k] = ctx.add(next[k], ctx.mul(poly[k], neg_beta));
        }
        poly = std::move(next);
    }
    std::vector<TowerElement> reduced;
    reduced.reserve(poly.size());
    for (const TowerElement& c : poly)
        reduced.push_back(ctx.lower_to(c, -1));  // every coefficient must land in F_p
    return DensePoly(-1, std::move(reduced));
}

// Both c_i and a_i must have degree exactly p^{i+1} over F_p.
inline bool degree_check(const TowerContext& ctx, int i, unsigned degree_budget = 128) {
    const Natural expected = nat_pow(Natural{ctx.p()}, static_cast<std::uint64_t>(i) + 1);
    const DensePoly fc = minimal_polynomial(ctx, ctx.canonical_generator(i), degree_budget);
    const DensePoly fa = minimal_polynomial(ctx, ctx.a_const(i), degree_budget);
    return Natural{fc.degree()} == expected && Natural{fa.degree()} == expected;
}

// Minimal polynomials compose through the defining relation:
// the minimal polynomial of c_i equals that of a_{i-1} evaluated at X^p - X.
inline bool minpoly_composition_check(const TowerContext& ctx, int i, unsigned degree_budget = 128) {
    if (i < 1)
        throw std::invalid_argument("minpoly_composition_check: needs i >= 1");
    const DensePoly lhs = minimal_polynomial(ctx, ctx.canonical_generator(i), degree_budget);
    const DensePoly fa = minimal_polynomial(ctx, ctx.a_const(i - 1), degree_budget);
    // X^p - X over F_p
    std::vector<unsigned> sub(ctx.p() + 1, 0);
    sub[ctx.p()] = 1;
    sub[1] = ctx.p() - 1;
    const DensePoly rhs = poly_compose(ctx, fa, poly_from_residues(ctx, sub));
    return lhs == rhs;
}

namespace detail {

// plain F_p polynomial helpers for the closed forms
inline std::vector<unsigned> fp_mul(unsigned p, const std::vector<unsigned>& a,
                                    const std::vector<unsigned>& b) {
    std::vector<unsigned> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

}  // namespace detail

// The closed form of the minimal polynomial of c_1 over F_p:
// X^{p^2} + (X^p - X - 1)^{p-1} - X^p - 2, reduced mod p.
inline DensePoly c1_minimal_polynomial_closed_form(const TowerContext& ctx) {
    const unsigned p = ctx.p();
    std::vector<unsigned> base(p + 1, 0);
    base[p] = 1;
    base[1] = p - 1;
    base[0] = p - 1;
    std::vector<unsigned> acc{1};
    for (unsigned k = 0; k < p - 1; ++k)
        acc = detail::fp_mul(p, acc, base);
    std::vector<unsigned> out(p * p + 1, 0);
    out[p * p] = 1;
    for (std::size_t k = 0; k < acc.size(); ++k)
        out[k] = (out[k] + acc[k]) % p;
    out[p] = (out[p] + p - 1) % p;
    out[0] = (out[0] + p - 2) % p;  // subtract 2
    return poly_from_residues(ctx, out);
}

// Closed form of the minimal polynomial of c_0^{p-1}:
// X^p + (X - 1)^{p-1} - 2 over F_p, checked against the orbit product.
inline bool c0_power_closed_form_check(const TowerContext& ctx, unsigned degree_budget = 128) {
    const unsigned p = ctx.p();
    std::vector<unsigned> acc{1};
    for (unsigned k = 0; k < p - 1; ++k)
        acc = detail::fp_mul(p, acc, std::vector<unsigned>{p - 1, 1});
    std::vector<unsigned> out(p + 1, 0);
    out[p] = 1;
    for (std::size_t k = 0; k < acc.size(); ++k)
        out[k] = (out[k] + acc[k]) % p;
    out[0] = (out[0] + p - 2) % p;
    const DensePoly closed = poly_from_residues(ctx, out);
    const TowerElement c0_pow = ctx.pow(ctx.canonical_generator(0), Natural{p - 1});
    return minimal_polynomial(ctx, c0_pow, degree_budget) == closed;
}

struct NormalBasisReport {
    bool is_basis = false;
    TowerElement det;               // det of the conjugate-coordinate matrix, at level i-1
    TowerElement product_det;       // det(D) det(V) det(S) from the diagonal/Vandermonde split
    bool factorization_matches = false;
};

namespace detail {

inline TowerElement det_gauss(const TowerContext& ctx, int level,
                              std::vector<std::vector<TowerElement>> m) {
    const std::size_t n = m.size();
    TowerElement det = ctx.one(level);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return ctx.zero(level);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = ctx.neg(det);
        }
        det = ctx.mul(det, m[col][col]);
        const TowerElement pivot_inv = ctx.inv(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero())
                continue;
            const TowerElement factor = ctx.mul(m[row][col], pivot_inv);
            for (std::size_t cc = col; cc < n; ++cc)
                m[row][cc] = ctx.sub(m[row][cc], ctx.mul(factor, m[col][cc]));
        }
    }
    return det;
}

}  // namespace detail

// The Galois conjugates of a_i form a basis of L_i over L_{i-1}. Columns are
// the coordinates of sigma_i^k(a_i) in the basis {c_i^{p-1}, ..., c_i, 1};
// the determinant is checked nonzero and against its exact factorization
// det(M) = det(D) det(V) det(S) with D = diag of binomials C(p-1, k),
// V = Vandermonde on the nodes k(-1)^i, S = a_{i-1} I.
inline NormalBasisReport normal_basis_check(const TowerContext& ctx, int i) {
    if (i < 0 || i > ctx.max_level())
        throw std::invalid_argument("normal_basis_check: level out of range");
    const unsigned p = ctx.p();
    const int below = i - 1;

    std::vector<TowerElement> conjugates;
    conjugates.reserve(p);
    for (unsigned k = 0; k < p; ++k)
        conjugates.push_back(ctx.relative_frobenius(ctx.a_const(i), k));

    std::vector<std::vector<TowerElement>> m(p, std::vector<TowerElement>(p, ctx.zero(below)));
    for (unsigned r = 0; r < p; ++r)
        for (unsigned k = 0; k < p; ++k)
            m[r][k] = conjugates[k].coeff(p - 1 - r);

    NormalBasisReport report;
    report.det = detail::det_gauss(ctx, below, std::move(m));
    report.is_basis = !report.det.is_zero();

    // det(D) and det(V) are F_p scalars; det(S) = a_{i-1}^p
    std::vector<std::vector<unsigned>> pascal(p, std::vector<unsigned>(p, 0));
    for (unsigned row = 0; row < p; ++row) {
        pascal[row][0] = 1;
        for (unsigned col = 1; col <= row; ++col)
            pascal[row][col] = (pascal[row - 1][col - 1] + (col <= row - 1 ? pascal[row - 1][col] : 0)) % p;
    }
    unsigned scalar = 1;
    for (unsigned k = 0; k < p; ++k)
        scalar = scalar * pascal[p - 1][k] % p;
    const unsigned sign = (i % 2 == 0) ? 1 : p - 1;
    std::vector<unsigned> nodes(p);
    for (unsigned k = 0; k < p; ++k)
        nodes[k] = k * sign % p;
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = a + 1; b < p; ++b)
            scalar = scalar * ((nodes[b] + p - nodes[a]) % p) % p;
    report.product_det = ctx.scalar_mul(scalar, ctx.pow(ctx.a_const(below), Natural{p}));
    report.factorization_matches = report.det == report.product_det;
    return report;
}

// Text form: descending degree, zero terms omitted, unit coefficients
// implicit, residues in decimal. Example: X^4 + X + 1.
inline std::string poly_str(const DensePoly& f) {
    if (f.level() != -1)
        throw std::invalid_argument("poly_str: only F_p polynomials have a text form");
    if (f.is_zero())
        return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const unsigned c = f.coeffs()[static_cast<std::size_t>(k)].residue();
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1)
                out += std::to_string(c);
            out += (k == 1) ? "X" : "X^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace astower
