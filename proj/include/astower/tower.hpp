#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "astower/factor.hpp"
#include "astower/natural.hpp"

namespace astower {

// Element of some tower level. Level -1 is a residue of F_p; level i >= 0 is
// a length-p coefficient sequence over level i-1, x = sum coeffs[k] * c_i^k.
// Always normalized: the sequence has exactly p entries, zeros included.
class TowerElement {
public:
    TowerElement() = default;

    static TowerElement make_residue(PrimeResidue value) {
        TowerElement e;
        e.level_ = -1;
        e.residue_ = value;
        return e;
    }

    static TowerElement make_composite(std::vector<TowerElement> coeffs) {
        TowerElement e;
        e.level_ = coeffs.front().level() + 1;
        e.coeffs_ = std::move(coeffs);
        return e;
    }

    int level() const { return level_; }

    PrimeResidue residue() const {
        if (level_ != -1)
            throw std::logic_error("TowerElement::residue: not a level -1 element");
        return residue_;
    }

    const std::vector<TowerElement>& coeffs() const {
        if (level_ < 0)
            throw std::logic_error("TowerElement::coeffs: level -1 element has none");
        return coeffs_;
    }

    const TowerElement& coeff(std::size_t k) const { return coeffs().at(k); }

    bool is_zero() const {
        if (level_ == -1)
            return residue_ == 0;
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const TowerElement& a, const TowerElement& b) {
        if (a.level_ != b.level_)
            return false;
        if (a.level_ == -1)
            return a.residue_ == b.residue_;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

private:
    int level_ = -1;
    PrimeResidue residue_ = 0;
    std::vector<TowerElement> coeffs_;

    friend class TowerContext;
    std::vector<TowerElement>& mutable_coeffs() { return coeffs_; }
};

struct TowerOptions {
    unsigned max_prime = 7;
    FactorBudget factor_budget{};
    FactorCache* cache = nullptr;
    bool factor_n_values = true;
};

// Immutable description of the tower F_p = L_{-1} < L_0 < ... < L_{i_max}.
// Level i is generated over level i-1 by c_i with c_i^p = c_i + a_{i-1},
// a_j = (c_{-1} ... c_j)^{p-1}. Caches the a_j constants and the norm
// exponents N_j = (p^{p^{j+1}} - 1) / (p^{p^j} - 1) with factorizations.
// Construction verifies tr(a_j) = (-1)^{j+1}, the certificate that every
// step's modulus X^p - X - a_j is irreducible.
class TowerContext {
public:
    TowerContext(unsigned p, int i_max, TowerOptions options = {}) : p_(p), i_max_(i_max) {
        if (p_ < 2 || !astower::is_prime(Natural{p_}))
            throw std::invalid_argument("TowerContext: p must be a prime number");
        if (p_ > options.max_prime)
            throw std::invalid_argument("TowerContext: p exceeds the configured maximum of " +
                                        std::to_string(options.max_prime));
        if (i_max_ < -1)
            throw std::invalid_argument("TowerContext: i_max must be >= -1");
        if (nat_pow(Natural{p_}, static_cast<std::uint64_t>(i_max_) + 1) > (Natural{1} << 20))
            throw std::invalid_argument("TowerContext: tower too deep for in-memory elements");

        binom_.assign(p_, std::vector<unsigned>(p_, 0));
        for (unsigned m = 0; m < p_; ++m) {
            binom_[m][0] = 1;
            for (unsigned j = 1; j <= m; ++j)
                binom_[m][j] = (binom_[m - 1][j - 1] + (j <= m - 1 ? binom_[m - 1][j] : 0)) % p_;
        }

        a_.push_back(one(-1));
        for (int j = 0; j <= i_max_; ++j) {
            TowerElement cj_pow = pow(canonical_generator(j), Natural{p_ - 1});
            a_.push_back(mul(embed(a_.back(), j), cj_pow));
        }

        for (int j = 0; j <= i_max_; ++j) {
            const std::uint64_t pj = u64_pow(p_, static_cast<unsigned>(j));
            const Natural denom = nat_pow(Natural{p_}, pj) - 1;
            const Natural numer = nat_pow(Natural{p_}, pj * p_) - 1;
            auto [q, r] = nat_divrem(numer, denom);
            if (!r.is_zero())
                throw std::logic_error("TowerContext: N_i definition did not divide exactly");
            n_.push_back(std::move(q));
        }

        n_fact_.reserve(n_.size());
        for (const Natural& n : n_) {
            if (options.factor_n_values) {
                n_fact_.push_back(try_factorize(n, options.factor_budget, options.cache));
            } else {
                PartialFactorization unattempted;
                unattempted.cofactor = n;
                n_fact_.push_back(std::move(unattempted));
            }
        }

        for (int j = 0; j <= i_max_; ++j) {
            const PrimeResidue expected = (j % 2 == 0) ? p_ - 1 : 1;  // (-1)^{j+1} mod p
            if (trace_to_prime(a_const(j)) != expected)
                throw std::logic_error("TowerContext: trace certificate failed at level " +
                                       std::to_string(j));
        }
    }

    unsigned p() const { return p_; }
    int max_level() const { return i_max_; }

    // a_j represented at level j; j in [-1, i_max].
    const TowerElement& a_const(int j) const {
        check_level_range(j);
        return a_[static_cast<std::size_t>(j + 1)];
    }

    const Natural& n_value(int j) const {
        if (j < 0 || j > i_max_)
            throw std::invalid_argument("TowerContext::n_value: level out of range");
        return n_[static_cast<std::size_t>(j)];
    }

    const PartialFactorization& n_factorization(int j) const {
        if (j < 0 || j > i_max_)
            throw std::invalid_argument("TowerContext::n_factorization: level out of range");
        return n_fact_[static_cast<std::size_t>(j)];
    }

    TowerElement zero(int level) const {
        check_level_range(level);
        if (level == -1)
            return TowerElement::make_residue(0);
        return TowerElement::make_composite(std::vector<TowerElement>(p_, zero(level - 1)));
    }

    TowerElement one(int level) const { return from_residue(1, level); }

    TowerElement from_residue(PrimeResidue value, int level) const {
        check_level_range(level);
        if (level == -1)
            return TowerElement::make_residue(value % p_);
        std::vector<TowerElement> coeffs(p_, zero(level - 1));
        coeffs[0] = from_residue(value, level - 1);
        return TowerElement::make_composite(std::move(coeffs));
    }

    // c_i: coordinates (0, 1, 0, ..., 0) over level i-1; c_{-1} = 1.
    TowerElement canonical_generator(int i) const {
        check_level_range(i);
        if (i == -1)
            return one(-1);
        std::vector<TowerElement> coeffs(p_, zero(i - 1));
        coeffs[1] = one(i - 1);
        return TowerElement::make_composite(std::move(coeffs));
    }

    TowerElement add(const TowerElement& x, const TowerElement& y) const {
        check_same_level(x, y, "add");
        return add_impl(x, y);
    }

    TowerElement sub(const TowerElement& x, const TowerElement& y) const {
        check_same_level(x, y, "sub");
        return add_impl(x, neg_impl(y));
    }

    TowerElement neg(const TowerElement& x) const {
        check_level_range(x.level());
        return neg_impl(x);
    }

    // k in F_p times x.
    TowerElement scalar_mul(unsigned k, const TowerElement& x) const {
        k %= p_;
        if (x.level() == -1)
            return TowerElement::make_residue((x.residue() * k) % p_);
        std::vector<TowerElement> coeffs;
        coeffs.reserve(p_);
        for (const auto& c : x.coeffs())
            coeffs.push_back(scalar_mul(k, c));
        return TowerElement::make_composite(std::move(coeffs));
    }

    // Schoolbook product of two degree-< p polynomials in c_i, then reduction
    // of the overflow powers via c_i^p = c_i + a_{i-1}.
    TowerElement mul(const TowerElement& x, const TowerElement& y) const {
        check_same_level(x, y, "mul");
        return mul_impl(x, y);
    }

    // Multiplicative inverse by extended Euclid against X^p - X - a_{i-1},
    // recursing for coefficient inverses; base case is prime-field inversion.
    TowerElement inv(const TowerElement& x) const {
        check_level_range(x.level());
        if (x.is_zero())
            throw std::domain_error("TowerContext::inv: division by zero");
        return inv_impl(x);
    }

    // Square-and-multiply; exponent is an arbitrary-precision natural.
    TowerElement pow(const TowerElement& x, const Natural& e) const {
        check_level_range(x.level());
        if (e < 0)
            throw std::invalid_argument("TowerContext::pow: negative exponent unsupported");
        if (e.is_zero())
            return one(x.level());
        TowerElement r = x;
        for (int bit = static_cast<int>(boost::multiprecision::msb(e)) - 1; bit >= 0; --bit) {
            r = mul_impl(r, r);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
                r = mul_impl(r, x);
        }
        return r;
    }

    // The p-power map, computed structurally: frobenius each coefficient,
    // then re-expand through c_i -> c_i + a_{i-1}. Extensionally pow(x, p).
    TowerElement frobenius(const TowerElement& x) const {
        check_level_range(x.level());
        if (x.level() == -1)
            return x;
        const int i = x.level();
        const TowerElement base = add_impl(canonical_generator(i), embed(a_const(i - 1), i));
        TowerElement r = zero(i);
        for (std::size_t k = x.coeffs().size(); k-- > 0;) {
            r = mul_impl(r, base);
            r = add_impl(r, embed(frobenius(x.coeff(k)), i));
        }
        return r;
    }

    // sigma_i^k where sigma_i : x -> x^{p^{p^i}} generates Gal(L_i/L_{i-1}).
    // Coefficients over L_{i-1} are fixed and c_i maps to c_i + k(-1)^i, so
    // the whole map is the linear coefficient transform
    //   out[j] = sum_{m >= j} C(m, j) eps^{m-j} coeffs[m],   eps = k(-1)^i,
    // with no exponentiation at all.
    TowerElement relative_frobenius(const TowerElement& x, unsigned k = 1) const {
        const int i = x.level();
        if (i < 0)
            throw std::invalid_argument("TowerContext::relative_frobenius: level must be >= 0");
        check_level_range(i);
        const unsigned sign = (i % 2 == 0) ? 1 : p_ - 1;
        const unsigned eps = (k % p_) * sign % p_;
        if (eps == 0)
            return x;
        std::vector<TowerElement> out;
        out.reserve(p_);
        for (unsigned j = 0; j < p_; ++j) {
            TowerElement acc = zero(i - 1);
            unsigned eps_pow = 1;
            for (unsigned m = j; m < p_; ++m) {
                saxpy_into(acc, binom_[m][j] * eps_pow % p_, x.coeff(m));
                eps_pow = eps_pow * eps % p_;
            }
            out.push_back(std::move(acc));
        }
        return TowerElement::make_composite(std::move(out));
    }

    // Sum of the p Galois conjugates, landing one level down.
    TowerElement trace_down(const TowerElement& x) const {
        const int i = x.level();
        if (i < 0)
            throw std::invalid_argument("TowerContext::trace_down: level must be >= 0");
        check_level_range(i);
        TowerElement acc = x;
        for (unsigned k = 1; k < p_; ++k)
            add_into(acc, relative_frobenius(x, k));
        return drop_level(acc, "trace_down");
    }

    PrimeResidue trace_to_prime(const TowerElement& x) const {
        TowerElement v = x;
        while (v.level() >= 0)
            v = trace_down(v);
        return v.residue();
    }

    // Product of the p Galois conjugates; for nonzero x equals pow(x, N_i).
    TowerElement norm_down(const TowerElement& x) const {
        const int i = x.level();
        if (i < 0)
            throw std::invalid_argument("TowerContext::norm_down: level must be >= 0");
        check_level_range(i);
        TowerElement acc = x;
        for (unsigned k = 1; k < p_; ++k)
            acc = mul_impl(acc, relative_frobenius(x, k));
        return drop_level(acc, "norm_down");
    }

    // The exponent route x -> x^{N_i}; the conjugate product is the default.
    TowerElement norm_down_via_pow(const TowerElement& x) const {
        const int i = x.level();
        if (i < 0)
            throw std::invalid_argument("TowerContext::norm_down_via_pow: level must be >= 0");
        check_level_range(i);
        return drop_level(pow(x, n_value(i)), "norm_down_via_pow");
    }

    // x in L_j, tested by repeated relative-Frobenius fixpoints: sigma_l
    // fixes exactly L_{l-1}, so descend one level per fixed map.
    bool is_in_subfield(const TowerElement& x, int target_level) const {
        check_level_range(x.level());
        if (target_level < -1 || target_level >= x.level())
            throw std::invalid_argument("TowerContext::is_in_subfield: need -1 <= j < level(x)");
        TowerElement v = x;
        for (int l = x.level(); l > target_level; --l) {
            if (relative_frobenius(v) != v)
                return false;
            v = drop_level(v, "is_in_subfield");
        }
        return true;
    }

    // Re-represent at a lower level a value that already lies in that
    // subfield; throws std::logic_error when the representation does not
    // collapse (an internal arithmetic bug, not a caller error).
    TowerElement lower_to(const TowerElement& x, int target_level) const {
        check_level_range(x.level());
        if (target_level < -1 || target_level > x.level())
            throw std::invalid_argument("TowerContext::lower_to: target level out of range");
        TowerElement v = x;
        while (v.level() > target_level)
            v = drop_level(v, "lower_to");
        return v;
    }

    // Same field value re-represented at a higher level (inclusion map).
    TowerElement embed(const TowerElement& x, int target_level) const {
        check_level_range(x.level());
        if (target_level > i_max_ || target_level < x.level())
            throw std::invalid_argument("TowerContext::embed: target level out of range");
        TowerElement v = x;
        while (v.level() < target_level) {
            std::vector<TowerElement> coeffs(p_, zero(v.level()));
            coeffs[0] = std::move(v);
            v = TowerElement::make_composite(std::move(coeffs));
        }
        return v;
    }

    TowerElement random_element(int level, std::mt19937_64& rng) const {
        check_level_range(level);
        if (level == -1)
            return TowerElement::make_residue(static_cast<PrimeResidue>(rng() % p_));
        std::vector<TowerElement> coeffs;
        coeffs.reserve(p_);
        for (unsigned k = 0; k < p_; ++k)
            coeffs.push_back(random_element(level - 1, rng));
        return TowerElement::make_composite(std::move(coeffs));
    }

    TowerElement random_nonzero(int level, std::mt19937_64& rng) const {
        TowerElement x = random_element(level, rng);
        while (x.is_zero())
            x = random_element(level, rng);
        return x;
    }

private:
    unsigned p_;
    int i_max_;
    std::vector<TowerElement> a_;              // a_[j + 1] holds a_j at level j
    std::vector<Natural> n_;                   // N_0 .. N_{i_max}
    std::vector<PartialFactorization> n_fact_;
    std::vector<std::vector<unsigned>> binom_;  // Pascal's triangle mod p

    static std::uint64_t u64_pow(std::uint64_t b, unsigned e) {
        std::uint64_t r = 1;
        for (unsigned k = 0; k < e; ++k)
            r *= b;
        return r;
    }

    void check_level_range(int level) const {
        if (level < -1 || level > i_max_)
            throw std::invalid_argument("TowerContext: level " + std::to_string(level) +
                                        " outside [-1, " + std::to_string(i_max_) + "]");
    }

    void check_same_level(const TowerElement& x, const TowerElement& y, const char* op) const {
        check_level_range(x.level());
        if (x.level() != y.level())
            throw std::invalid_argument(std::string("TowerContext::") + op + ": level mismatch (" +
                                        std::to_string(x.level()) + " vs " +
                                        std::to_string(y.level()) + ")");
    }

    TowerElement add_impl(const TowerElement& x, const TowerElement& y) const {
        if (x.level() == -1)
            return TowerElement::make_residue((x.residue() + y.residue()) % p_);
        std::vector<TowerElement> coeffs;
        coeffs.reserve(p_);
        for (unsigned k = 0; k < p_; ++k)
            coeffs.push_back(add_impl(x.coeff(k), y.coeff(k)));
        return TowerElement::make_composite(std::move(coeffs));
    }

    // acc += x, reusing acc's allocation
    void add_into(TowerElement& acc, const TowerElement& x) const {
        if (acc.level_ == -1) {
            acc.residue_ = (acc.residue_ + x.residue_) % p_;
            return;
        }
        for (unsigned k = 0; k < p_; ++k)
            add_into(acc.coeffs_[k], x.coeffs_[k]);
    }

    // acc += k * x for a scalar k in F_p
    void saxpy_into(TowerElement& acc, unsigned k, const TowerElement& x) const {
        if (k == 0)
            return;
        if (acc.level_ == -1) {
            acc.residue_ = (acc.residue_ + k * x.residue_) % p_;
            return;
        }
        for (unsigned j = 0; j < p_; ++j)
            saxpy_into(acc.coeffs_[j], k, x.coeffs_[j]);
    }

    TowerElement neg_impl(const TowerElement& x) const {
        if (x.level() == -1)
            return TowerElement::make_residue((p_ - x.residue()) % p_);
        std::vector<TowerElement> coeffs;
        coeffs.reserve(p_);
        for (const auto& c : x.coeffs())
            coeffs.push_back(neg_impl(c));
        return TowerElement::make_composite(std::move(coeffs));
    }

    TowerElement mul_impl(const TowerElement& x, const TowerElement& y) const {
        if (x.level() == -1)
            return TowerElement::make_residue((x.residue() * y.residue()) % p_);
        const int i = x.level();
        std::vector<TowerElement> prod(2 * p_ - 1);  // slots start unset
        std::vector<char> set(2 * p_ - 1, 0);
        for (unsigned a = 0; a < p_; ++a) {
            if (x.coeff(a).is_zero())
                continue;
            for (unsigned b = 0; b < p_; ++b) {
                if (y.coeff(b).is_zero())
                    continue;
                TowerElement t = mul_impl(x.coeff(a), y.coeff(b));
                if (set[a + b]) {
                    add_into(prod[a + b], t);
                } else {
                    prod[a + b] = std::move(t);
                    set[a + b] = 1;
                }
            }
        }
        for (unsigned d = 0; d < 2 * p_ - 1; ++d)
            if (!set[d])
                prod[d] = zero(i - 1);
        const TowerElement& a_low = a_const(i - 1);
        for (unsigned d = 2 * p_ - 2; d >= p_; --d) {
            if (prod[d].is_zero())
                continue;
            const TowerElement t = std::move(prod[d]);
            add_into(prod[d - p_ + 1], t);
            const TowerElement ta = mul_impl(t, a_low);
            add_into(prod[d - p_], ta);
        }
        prod.resize(p_);
        return TowerElement::make_composite(std::move(prod));
    }

    TowerElement inv_impl(const TowerElement& x) const {
        if (x.level() == -1) {
            const unsigned r = x.residue();
            unsigned v = 1;
            for (unsigned e = 0; e < p_ - 2; ++e)
                v = v * r % p_;
            return TowerElement::make_residue(v);
        }
        const int below = x.level() - 1;
        using Poly = std::vector<TowerElement>;
        auto trim = [](Poly& f) {
            while (!f.empty() && f.back().is_zero())
                f.pop_back();
        };
        auto poly_sub = [&](const Poly& f, const Poly& g) {
            Poly out(std::max(f.size(), g.size()), zero(below));
            for (std::size_t k = 0; k < f.size(); ++k)
                out[k] = f[k];
            for (std::size_t k = 0; k < g.size(); ++k)
                out[k] = add_impl(out[k], neg_impl(g[k]));
            trim(out);
            return out;
        };
        auto poly_mul = [&](const Poly& f, const Poly& g) {
            if (f.empty() || g.empty())
                return Poly{};
            Poly out(f.size() + g.size() - 1, zero(below));
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b)
                    out[a + b] = add_impl(out[a + b], mul_impl(f[a], g[b]));
            trim(out);
            return out;
        };
        // divides f by g (g nonzero), returning (quotient, remainder)
        auto poly_divrem = [&](Poly f, const Poly& g) {
            Poly q(f.size() > g.size() - 1 ? f.size() - g.size() + 1 : 0, zero(below));
            const TowerElement lead_inv = inv_impl(g.back());
            while (f.size() >= g.size()) {
                TowerElement factor = mul_impl(f.back(), lead_inv);
                const std::size_t shift = f.size() - g.size();
                for (std::size_t k = 0; k < g.size(); ++k)
                    f[shift + k] = add_impl(f[shift + k], neg_impl(mul_impl(factor, g[k])));
                q[shift] = std::move(factor);
                trim(f);
                if (f.empty())
                    break;
            }
            return std::pair<Poly, Poly>{std::move(q), std::move(f)};
        };

        // modulus X^p - X - a_{i-1}
        Poly modulus(p_ + 1, zero(below));
        modulus[p_] = one(below);
        modulus[1] = neg_impl(one(below));
        modulus[0] = neg_impl(a_const(below));

        Poly r0 = modulus;
        Poly r1(x.coeffs());
        trim(r1);
        Poly t0, t1{one(below)};
        while (r1.size() > 1) {
            auto [q, r] = poly_divrem(r0, r1);
            Poly t_next = poly_sub(t0, poly_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t_next);
            if (r1.empty())
                throw std::logic_error("TowerContext::inv: modulus not coprime to element");
        }
        const TowerElement scale = inv_impl(r1.front());
        if (t1.size() > p_)
            throw std::logic_error("TowerContext::inv: cofactor degree exceeds field degree");
        Poly result(p_, zero(below));
        for (std::size_t k = 0; k < t1.size(); ++k)
            result[k] = mul_impl(t1[k], scale);
        return TowerElement::make_composite(std::move(result));
    }

    // Re-represent an element lying in the subfield one level down. The
    // coefficients above index 0 must vanish; anything else is an
    // arithmetic bug, not a caller error.
    TowerElement drop_level(const TowerElement& x, const char* op) const {
        for (unsigned k = 1; k < p_; ++k)
            if (!x.coeff(k).is_zero())
                throw std::logic_error(std::string("TowerContext::") + op +
                                       ": element does not lie one level down");
        return x.coeff(0);
    }
};

// Canonical string form, recursively [e0,e1,...,e_{p-1}]; level -1 residues
// print as decimal digits. p=2's c_1 prints as [[0,0],[1,0]].
inline std::string to_string(const TowerElement& x) {
    if (x.level() == -1)
        return std::to_string(x.residue());
    std::string s = "[";
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        if (k > 0)
            s += ",";
        s += to_string(x.coeff(k));
    }
    s += "]";
    return s;
}

namespace detail {

inline TowerElement parse_element_at(unsigned p, std::string_view text, std::size_t& pos) {
    if (pos >= text.size())
        throw std::invalid_argument("parse_element: unexpected end of input");
    if (text[pos] == '[') {
        ++pos;
        std::vector<TowerElement> coeffs;
        for (unsigned k = 0; k < p; ++k) {
            if (k > 0) {
                if (pos >= text.size() || text[pos] != ',')
                    throw std::invalid_argument("parse_element: expected ','");
                ++pos;
            }
            coeffs.push_back(parse_element_at(p, text, pos));
            if (coeffs.size() > 1 && coeffs.back().level() != coeffs.front().level())
                throw std::invalid_argument("parse_element: mixed levels in one sequence");
        }
        if (pos >= text.size() || text[pos] != ']')
            throw std::invalid_argument("parse_element: expected ']' (exactly p entries)");
        ++pos;
        return TowerElement::make_composite(std::move(coeffs));
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw std::invalid_argument("parse_element: expected digit or '['");
    unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
    if (v >= p)
        throw std::invalid_argument("parse_element: residue " + std::to_string(v) + " not below p");
    return TowerElement::make_residue(static_cast<PrimeResidue>(v));
}

}  // namespace detail

inline TowerElement parse_element(unsigned p, std::string_view text) {
    std::size_t pos = 0;
    TowerElement e = detail::parse_element_at(p, text, pos);
    if (pos != text.size())
        throw std::invalid_argument("parse_element: trailing characters");
    return e;
}

}  // namespace astower
