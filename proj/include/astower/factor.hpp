#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "astower/natural.hpp"

namespace astower {

// Whether a primality claim is backed by a deterministic test or by
// probabilistic Miller-Rabin rounds.
enum class Certainty { deterministic, probable };

inline const char* certainty_name(Certainty c) {
    return c == Certainty::deterministic ? "deterministic" : "probable";
}

struct FactorEntry {
    Natural prime;
    unsigned exponent = 1;
    Certainty certainty = Certainty::deterministic;
};

// Complete or partial prime factorization: primes strictly increasing,
// exponents >= 1, one certainty flag per prime.
class Factorization {
public:
    using const_iterator = std::vector<FactorEntry>::const_iterator;

    Factorization() = default;

    void insert(const Natural& prime, unsigned exponent, Certainty certainty) {
        if (prime < 2)
            throw std::invalid_argument("Factorization::insert: prime < 2");
        if (exponent == 0)
            throw std::invalid_argument("Factorization::insert: zero exponent");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                                   [](const FactorEntry& e, const Natural& v) { return e.prime < v; });
        if (it != entries_.end() && it->prime == prime) {
            it->exponent += exponent;
            if (certainty == Certainty::probable)
                it->certainty = Certainty::probable;
        } else {
            entries_.insert(it, FactorEntry{prime, exponent, certainty});
        }
    }

    Natural value() const {
        Natural v{1};
        for (const auto& e : entries_)
            for (unsigned k = 0; k < e.exponent; ++k)
                v *= e.prime;
        return v;
    }

    Certainty certainty() const {
        for (const auto& e : entries_)
            if (e.certainty == Certainty::probable)
                return Certainty::probable;
        return Certainty::deterministic;
    }

    bool contains(const Natural& prime) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                                   [](const FactorEntry& e, const Natural& v) { return e.prime < v; });
        return it != entries_.end() && it->prime == prime;
    }

    // Disjoint union of two factorizations with no shared prime; the shared
    // case is a caller bug, not a merge policy.
    static Factorization merge_coprime(const Factorization& a, const Factorization& b) {
        for (const auto& e : b.entries_)
            if (a.contains(e.prime))
                throw std::invalid_argument("merge_coprime: shared prime " + nat_str(e.prime));
        Factorization out = a;
        for (const auto& e : b.entries_)
            out.insert(e.prime, e.exponent, e.certainty);
        return out;
    }

    // All positive divisors, ascending. Guarded by the caller (counts explode).
    std::vector<Natural> divisors() const {
        std::vector<Natural> out{Natural{1}};
        for (const auto& e : entries_) {
            const std::size_t n = out.size();
            Natural pk{1};
            for (unsigned k = 1; k <= e.exponent; ++k) {
                pk *= e.prime;
                for (std::size_t i = 0; i < n; ++i)
                    out.push_back(out[i] * pk);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string str() const {
        if (entries_.empty())
            return "1";
        std::string s;
        for (const auto& e : entries_) {
            if (!s.empty())
                s += " * ";
            s += nat_str(e.prime) + "^" + std::to_string(e.exponent);
        }
        return s;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }

    friend bool operator==(const Factorization& a, const Factorization& b) {
        if (a.entries_.size() != b.entries_.size())
            return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i].prime != b.entries_[i].prime || a.entries_[i].exponent != b.entries_[i].exponent)
                return false;
        return true;
    }
    friend bool operator!=(const Factorization& a, const Factorization& b) { return !(a == b); }

private:
    std::vector<FactorEntry> entries_;
};

// Factored part plus whatever composite cofactor the budget left behind.
struct PartialFactorization {
    Factorization factors;
    Natural cofactor{1};

    bool complete() const { return cofactor == 1; }
    Natural value() const { return factors.value() * cofactor; }
};

class IncompleteFactorization : public std::runtime_error {
public:
    explicit IncompleteFactorization(PartialFactorization partial)
        : std::runtime_error("factorization incomplete, composite cofactor " + nat_str(partial.cofactor)),
          partial_(std::move(partial)) {}

    const PartialFactorization& partial() const { return partial_; }

private:
    PartialFactorization partial_;
};

struct FactorBudget {
    std::chrono::milliseconds time_limit{std::chrono::seconds{30}};
    std::uint64_t rho_iterations = std::uint64_t{1} << 26;
    std::uint64_t seed = 1;
};

namespace detail {

// Trial division covers everything below this; Pollard-rho handles the rest.
inline constexpr std::uint32_t kTrialDivisionBound = 1u << 20;

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionBound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialDivisionBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialDivisionBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Uniform-ish value in [0, bound), bound >= 1.
inline Natural random_below(std::mt19937_64& rng, const Natural& bound) {
    const std::size_t words = (boost::multiprecision::msb(bound) / 64) + 2;
    Natural r{0};
    for (std::size_t w = 0; w < words; ++w) {
        r <<= 64;
        r += Natural{rng()};
    }
    return r % bound;
}

// x such that x in [2, n-2], derived deterministically from (n, i).
inline Natural derived_base(const Natural& n, std::uint64_t i) {
    std::mt19937_64 rng(fnv1a64(nat_str(n)) ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    return 2 + random_below(rng, n - 3);
}

// true when a witnesses that odd n is composite; n - 1 == d * 2^s.
inline bool miller_rabin_witness(const Natural& n, const Natural& a, const Natural& d, unsigned s) {
    Natural x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true;
}

}  // namespace detail

// Below 2^64 the fixed 12-prime Miller-Rabin base set is exhaustive, so the
// answer is deterministic; above that, 40 derived-base rounds ("probable").
inline bool is_prime(const Natural& n) {
    if (n < 2)
        return false;
    static constexpr std::uint32_t first_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                                     23, 29, 31, 37, 41, 43, 47, 53};
    for (std::uint32_t p : first_primes) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Natural d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    static constexpr std::uint32_t det_bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint32_t a : det_bases)
        if (detail::miller_rabin_witness(n, Natural{a}, d, s))
            return false;
    const Natural word_bound = Natural{1} << 64;
    if (n < word_bound)
        return true;
    for (std::uint64_t i = 0; i < 40; ++i)
        if (detail::miller_rabin_witness(n, detail::derived_base(n, i), d, s))
            return false;
    return true;
}

inline Certainty primality_certainty(const Natural& n) {
    return n < (Natural{1} << 64) ? Certainty::deterministic : Certainty::probable;
}

namespace detail {

// Brent-cycle Pollard rho with batched gcd. Returns a proper factor of n, or
// 0 when the iteration/time budget ran out. Restarts use seeds derived from
// the restart counter so runs are reproducible.
inline Natural pollard_rho_brent(const Natural& n, std::uint64_t max_iters,
                                 std::chrono::steady_clock::time_point deadline, std::uint64_t seed) {
    const std::uint64_t batch = 128;
    std::uint64_t used = 0;
    for (std::uint64_t restart = 0;; ++restart) {
        std::mt19937_64 rng(fnv1a64(nat_str(n)) ^ (seed + restart * 0xc2b2ae3d27d4eb4full));
        Natural y = 1 + random_below(rng, n - 1);
        Natural c = 1 + random_below(rng, n - 1);
        Natural x, ys, q{1}, g{1};
        std::uint64_t r = 1;
        auto step = [&](Natural& v) { v = (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(batch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                g = nat_gcd(q, n);
                k += lim;
                used += lim;
                if (used >= max_iters || std::chrono::steady_clock::now() >= deadline)
                    return g != 1 && g != n ? g : Natural{0};
            }
            r <<= 1;
        }
        if (g == n) {
            // batched gcd overshot the cycle; replay one step at a time
            do {
                step(ys);
                g = nat_gcd(boost::multiprecision::abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

}  // namespace detail

// In-memory map of verified factorizations; the text-file form lives in
// factor_cache.hpp.
class FactorCache {
public:
    void insert(const Natural& n, const Factorization& f) {
        if (f.value() != n)
            throw std::invalid_argument("FactorCache::insert: product mismatch for " + nat_str(n));
        entries_[n] = f;
    }

    const Factorization* find(const Natural& n) const {
        auto it = entries_.find(n);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::map<Natural, Factorization> entries_;
};

// Trial division to 2^20, then Brent-cycle rho on what remains, recursing on
// composite split parts. A cache hit is re-verified (product and primality)
// before it is trusted.
inline PartialFactorization try_factorize(const Natural& n, const FactorBudget& budget = {},
                                          FactorCache* cache = nullptr) {
    if (n < 1)
        throw std::domain_error("try_factorize: n must be >= 1");
    PartialFactorization out;
    if (n == 1)
        return out;

    if (cache != nullptr) {
        if (const Factorization* hit = cache->find(n)) {
            bool ok = hit->value() == n;
            for (auto it = hit->begin(); ok && it != hit->end(); ++it)
                ok = is_prime(it->prime);
            if (ok) {
                for (const auto& e : *hit)
                    out.factors.insert(e.prime, e.exponent, primality_certainty(e.prime));
                return out;
            }
        }
    }

    const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;
    Natural rest = n;
    for (std::uint32_t p : detail::small_primes()) {
        if (Natural{p} * p > rest)
            break;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            out.factors.insert(Natural{p}, e, Certainty::deterministic);
        if (rest == 1)
            break;
    }

    std::vector<Natural> pending;
    if (rest > 1)
        pending.push_back(rest);
    while (!pending.empty()) {
        Natural m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            out.factors.insert(m, 1, primality_certainty(m));
            continue;
        }
        Natural d = detail::pollard_rho_brent(m, budget.rho_iterations, deadline, budget.seed);
        if (d == 0) {
            out.cofactor *= m;
            continue;
        }
        pending.push_back(d);
        pending.push_back(m / d);
    }

    if (cache != nullptr && out.complete())
        cache->insert(n, out.factors);
    return out;
}

inline Factorization factorize(const Natural& n, const FactorBudget& budget = {},
                               FactorCache* cache = nullptr) {
    PartialFactorization partial = try_factorize(n, budget, cache);
    if (!partial.complete())
        throw IncompleteFactorization(std::move(partial));
    return std::move(partial.factors);
}

// Exact multiplicative order of x given an annihilating exponent E and its
// complete factorization: starting from m = E, strip each prime q of E while
// x^(m/q) stays the identity. Works for any subgroup-of-Z membership
// predicate, which is how the subfield variant reuses it.
template <class Elem, class PowFn, class IdentityFn>
Natural reduce_order(const Elem& x, const Natural& exponent, const Factorization& exponent_factors,
                     PowFn&& pow_fn, IdentityFn&& is_identity) {
    if (exponent < 1)
        throw std::invalid_argument("reduce_order: exponent must be >= 1");
    if (exponent_factors.value() != exponent)
        throw std::invalid_argument("reduce_order: factorization does not match exponent");
    if (!is_identity(pow_fn(x, exponent)))
        throw std::invalid_argument("reduce_order: x^E is not the identity");
    Natural m = exponent;
    for (const auto& entry : exponent_factors) {
        while (m % entry.prime == 0) {
            Natural candidate = m / entry.prime;
            if (!is_identity(pow_fn(x, candidate)))
                break;
            m = candidate;
        }
    }
    return m;
}

}  // namespace astower
