#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace astower {

// Arbitrary-precision non-negative integer. Backed by Boost.Multiprecision;
// the type itself is signed, the functions below keep the non-negative
// invariant and throw instead of wrapping.
using Natural = boost::multiprecision::cpp_int;

// Residue of F_p, the level -1 base field of every tower.
using PrimeResidue = unsigned;

inline Natural nat_sub(const Natural& a, const Natural& b) {
    if (a < b)
        throw std::domain_error("nat_sub: underflow (a < b)");
    return a - b;
}

// Quotient and remainder with exact integer semantics, b != 0.
inline std::pair<Natural, Natural> nat_divrem(const Natural& a, const Natural& b) {
    if (b.is_zero())
        throw std::domain_error("nat_divrem: division by zero");
    Natural q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    return {std::move(q), std::move(r)};
}

inline Natural nat_gcd(const Natural& a, const Natural& b) {
    return boost::multiprecision::gcd(a, b);
}

// Plain integer power (no modulus).
inline Natural nat_pow(const Natural& base, std::uint64_t exponent) {
    Natural r{1};
    Natural b = base;
    while (exponent != 0) {
        if (exponent & 1)
            r *= b;
        exponent >>= 1;
        if (exponent != 0)
            b *= b;
    }
    return r;
}

inline std::string nat_str(const Natural& n) { return n.str(); }

inline Natural nat_parse(const std::string& text) {
    Natural n{text};
    if (n < 0)
        throw std::domain_error("nat_parse: negative value");
    return n;
}

}  // namespace astower
