#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "astower/factor.hpp"

namespace astower {

// Text form of the factor cache: one line per integer,
//   N = p1^e1 * p2^e2 * ...
// with decimal integers; '#' starts a comment. Loading re-verifies every
// line (product and primality) and rejects the ones that fail, reporting
// the line number.

struct CacheLineError {
    std::size_t line = 0;
    std::string message;
};

struct CacheLoadResult {
    FactorCache cache;
    std::vector<CacheLineError> rejected;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

inline bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace detail

// Parses one `N = p1^e1 * ...` line into (N, factorization). Throws
// std::invalid_argument on malformed input.
inline std::pair<Natural, Factorization> parse_cache_line(const std::string& raw) {
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("missing '='");
    const std::string lhs = detail::strip(raw.substr(0, eq));
    if (!detail::all_digits(lhs))
        throw std::invalid_argument("left side is not a decimal integer");
    const Natural n = nat_parse(lhs);
    if (n < 1)
        throw std::invalid_argument("left side must be >= 1");

    Factorization f;
    std::string rhs = detail::strip(raw.substr(eq + 1));
    if (rhs.empty()) {
        if (n != 1)
            throw std::invalid_argument("empty product only factors 1");
        return {n, f};
    }
    std::size_t pos = 0;
    while (pos <= rhs.size()) {
        std::size_t next = rhs.find('*', pos);
        const std::string term =
            detail::strip(next == std::string::npos ? rhs.substr(pos) : rhs.substr(pos, next - pos));
        if (term.empty())
            throw std::invalid_argument("empty factor term");
        const auto caret = term.find('^');
        std::string prime_text = term, exp_text = "1";
        if (caret != std::string::npos) {
            prime_text = detail::strip(term.substr(0, caret));
            exp_text = detail::strip(term.substr(caret + 1));
        }
        if (!detail::all_digits(prime_text) || !detail::all_digits(exp_text))
            throw std::invalid_argument("malformed factor term '" + term + "'");
        const Natural prime = nat_parse(prime_text);
        const unsigned long exponent = std::stoul(exp_text);
        if (exponent == 0)
            throw std::invalid_argument("zero exponent in term '" + term + "'");
        f.insert(prime, static_cast<unsigned>(exponent), primality_certainty(prime));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return {n, f};
}

inline CacheLoadResult load_factor_cache(std::istream& in) {
    CacheLoadResult result;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        if (detail::strip(raw).empty())
            continue;
        try {
            auto [n, f] = parse_cache_line(raw);
            if (f.value() != n)
                throw std::invalid_argument("product " + nat_str(f.value()) + " != " + nat_str(n));
            for (const auto& e : f)
                if (!is_prime(e.prime))
                    throw std::invalid_argument(nat_str(e.prime) + " is not prime");
            result.cache.insert(n, f);
        } catch (const std::invalid_argument& ex) {
            result.rejected.push_back({line_no, ex.what()});
        }
    }
    return result;
}

inline CacheLoadResult load_factor_cache_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open factor cache '" + path + "'");
    return load_factor_cache(in);
}

inline void save_factor_cache(std::ostream& out, const FactorCache& cache) {
    for (const auto& [n, f] : cache)
        out << nat_str(n) << " = " << f.str() << "\n";
}

inline void save_factor_cache_file(const std::string& path, const FactorCache& cache) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write factor cache '" + path + "'");
    save_factor_cache(out, cache);
}

}  // namespace astower
