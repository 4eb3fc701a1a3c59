#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "astower/factor.hpp"
#include "astower/natural.hpp"
#include "astower/tower.hpp"

namespace astower {

// What is known about a multiplicative order. The true order divides
// `divides` and is a multiple of `multiple_of`; the two coincide exactly
// when the relevant factorizations were complete.
struct OrderBound {
    Natural divides{1};
    Natural multiple_of{1};

    bool exact() const { return divides == multiple_of; }
    const Natural& value() const {
        if (!exact())
            throw std::logic_error("OrderBound::value: order only known up to bounds");
        return divides;
    }
};

class OrderUncomputable : public std::runtime_error {
public:
    OrderUncomputable(std::string what, OrderBound bound)
        : std::runtime_error(std::move(what)), bound_(std::move(bound)) {}

    const OrderBound& bound() const { return bound_; }

private:
    OrderBound bound_;
};

// Per-level order summary: N_i, M_i (order of c_i modulo L_{i-1}^x), and the
// orders of c_i and a_i, each computed independently and cross-checked.
struct OrderReport {
    unsigned p = 2;
    int level = 0;
    Natural n;
    PartialFactorization n_factorization;
    OrderBound m;
    OrderBound order_c;
    OrderBound order_a;
    std::optional<bool> m_equals_n;       // unknown while M_i is only bounded
    bool order_equality_exception = false;  // the one (p, i) = (2, 1) exception
    Certainty certainty = Certainty::deterministic;

    bool exact() const { return m.exact() && order_c.exact() && order_a.exact(); }
};

namespace detail {

// Factor-stripping over a possibly partial factorization of E. `member`
// must test membership in a subgroup of Z (as a predicate on x^k); the
// identity test and the subfield test are the two instantiations.
template <class Member>
OrderBound strip_order(const TowerContext& ctx, const TowerElement& x, const Natural& exponent,
                       const PartialFactorization& exponent_factors, Member&& member) {
    if (exponent < 1)
        throw std::invalid_argument("strip_order: exponent must be >= 1");
    if (exponent_factors.value() != exponent)
        throw std::invalid_argument("strip_order: factorization does not match exponent");
    if (!member(ctx.pow(x, exponent)))
        throw std::invalid_argument("strip_order: x^E fails the membership contract");
    Natural m = exponent;
    for (const auto& entry : exponent_factors.factors) {
        while (m % entry.prime == 0) {
            Natural candidate = m / entry.prime;
            if (!member(ctx.pow(x, candidate)))
                break;
            m = candidate;
        }
    }
    Natural recovered{1};
    for (const auto& entry : exponent_factors.factors) {
        Natural t = m;
        while (t % entry.prime == 0) {
            t /= entry.prime;
            recovered *= entry.prime;
        }
    }
    return OrderBound{m, recovered};
}

inline int exponent_start_level(unsigned p, int i) { return (p == 2 && i >= 2) ? 1 : 0; }

}  // namespace detail

// Annihilating exponent for both c_i and a_i: N_0...N_i, except N_1...N_i
// for p = 2 at i >= 2. The factorization is assembled as a disjoint union of
// the per-level factorizations (the N_j are pairwise coprime).
inline std::pair<Natural, PartialFactorization> order_exponent_partial(const TowerContext& ctx, int i) {
    Natural e{1};
    PartialFactorization merged;
    for (int j = detail::exponent_start_level(ctx.p(), i); j <= i; ++j) {
        const PartialFactorization& nf = ctx.n_factorization(j);
        e *= ctx.n_value(j);
        merged.factors = Factorization::merge_coprime(merged.factors, nf.factors);
        merged.cofactor *= nf.cofactor;
    }
    return {std::move(e), std::move(merged)};
}

inline std::pair<Natural, Factorization> order_exponent_bound(const TowerContext& ctx, int i) {
    auto [e, partial] = order_exponent_partial(ctx, i);
    if (!partial.complete()) {
        OrderBound bound;
        bound.divides = e;
        throw OrderUncomputable("order_exponent_bound: missing factorization through level " +
                                    std::to_string(i),
                                std::move(bound));
    }
    return {std::move(e), std::move(partial.factors)};
}

// Exact multiplicative order of x from an annihilating exponent E with
// complete factorization.
inline Natural element_order(const TowerContext& ctx, const TowerElement& x, const Natural& exponent,
                             const Factorization& exponent_factors) {
    const TowerElement identity = ctx.one(x.level());
    return reduce_order(
        x, exponent, exponent_factors,
        [&](const TowerElement& v, const Natural& e) { return ctx.pow(v, e); },
        [&](const TowerElement& v) { return v == identity; });
}

// Bounds variant used when the factorization has a composite cofactor left.
inline OrderBound element_order_bound(const TowerContext& ctx, const TowerElement& x,
                                      const Natural& exponent,
                                      const PartialFactorization& exponent_factors) {
    const TowerElement identity = ctx.one(x.level());
    return detail::strip_order(ctx, x, exponent, exponent_factors,
                               [&](const TowerElement& v) { return v == identity; });
}

// M_i, the least m >= 1 with c_i^m in L_{i-1}. The m with that property form
// a subgroup of Z containing N_i, so factor-stripping from N_i with the
// subfield-membership predicate finds the generator.
inline OrderBound order_mod_subfield_bound(const TowerContext& ctx, int i) {
    if (i < 0 || i > ctx.max_level())
        throw std::invalid_argument("order_mod_subfield: level out of range");
    const TowerElement c = ctx.canonical_generator(i);
    const Natural& n = ctx.n_value(i);
    // c_i^{N_i} is the norm a_{i-1}; anything else is an arithmetic bug
    if (ctx.pow(c, n) != ctx.embed(ctx.a_const(i - 1), i))
        throw std::logic_error("order_mod_subfield: c_i^{N_i} != a_{i-1} at level " + std::to_string(i));
    return detail::strip_order(ctx, c, n, ctx.n_factorization(i),
                               [&](const TowerElement& v) { return ctx.is_in_subfield(v, i - 1); });
}

inline Natural order_mod_subfield(const TowerContext& ctx, int i) {
    OrderBound b = order_mod_subfield_bound(ctx, i);
    if (!b.exact())
        throw OrderUncomputable(
            "order_mod_subfield: factorization of N_" + std::to_string(i) + " incomplete", b);
    return b.value();
}

namespace detail {

inline void report_cross_checks(const TowerContext& ctx, std::vector<OrderReport>& table) {
    const unsigned p = ctx.p();
    Natural prev_order_a{1};
    bool prev_order_a_exact = true;
    for (const OrderReport& rep : table) {
        const int i = rep.level;
        auto fail = [&](const std::string& identity) {
            throw std::logic_error("order cross-check failed at level " + std::to_string(i) + ": " +
                                   identity);
        };
        if (rep.m.exact()) {
            const Natural& m = rep.m.value();
            if (m <= 1 || rep.n % m != 0)
                fail("M_i > 1 and M_i | N_i");
            const Natural pe = nat_pow(Natural{p}, static_cast<std::uint64_t>(i) + 1);
            if (m % pe != 1)
                fail("M_i = 1 (mod p^{i+1})");
            if (p != 2 && m % (2 * pe) != 1)
                fail("M_i = 1 (mod 2p^{i+1}) for odd p");
            if (p == 2 && i >= 2 && m % (Natural{1} << (i + 2)) != 1)
                fail("M_i = 1 (mod 2^{i+2}) for p=2, i>=2");
        }
        if (rep.m.exact() && prev_order_a_exact && nat_gcd(rep.m.value(), prev_order_a) != 1)
            fail("gcd(M_i, O(a_{i-1})) = 1");
        if (rep.order_c.exact() && rep.m.exact() && prev_order_a_exact &&
            rep.order_c.value() != rep.m.value() * prev_order_a)
            fail("O(c_i) = M_i * O(a_{i-1})");
        if (rep.order_c.exact() && rep.order_a.exact()) {
            const bool equal = rep.order_c.value() == rep.order_a.value();
            if (equal == rep.order_equality_exception)
                fail("O(c_i) = O(a_i) except exactly at (p, i) = (2, 1)");
        }
        // product formula for the common order
        {
            bool have_products = true;
            Natural expected{1};
            if (p != 2) {
                for (int j = 0; j <= i && have_products; ++j)
                    have_products = table[static_cast<std::size_t>(j)].m.exact();
                if (have_products)
                    for (int j = 0; j <= i; ++j)
                        expected *= table[static_cast<std::size_t>(j)].m.value();
            } else if (i <= 1) {
                for (int j = 0; j <= i; ++j)
                    expected *= ctx.n_value(j);
            } else {
                for (int j = 1; j <= std::min(i, 4); ++j)
                    expected *= ctx.n_value(j);
                for (int j = 5; j <= i && have_products; ++j)
                    have_products = table[static_cast<std::size_t>(j)].m.exact();
                if (have_products)
                    for (int j = 5; j <= i; ++j)
                        expected *= table[static_cast<std::size_t>(j)].m.value();
            }
            if (have_products && rep.order_c.exact() && rep.order_c.value() != expected)
                fail("O(c_i) equals the product of the per-level orders modulo subfields");
        }
        // lower bound on the order
        if (rep.order_c.exact()) {
            if (p != 2) {
                Natural bound{1};
                Natural pk{1};
                for (int j = 1; j <= i + 1; ++j) {
                    pk *= p;
                    bound *= 1 + 2 * pk;
                }
                if (rep.order_c.value() < bound)
                    fail("O(c_i) >= (1+2p)...(1+2p^{i+1}) for odd p");
            } else if (i >= 5) {
                Natural bound = ctx.n_value(1) * ctx.n_value(2) * ctx.n_value(3) * ctx.n_value(4);
                for (int j = 7; j <= i + 2; ++j)
                    bound *= (Natural{1} << j) + 1;
                if (rep.order_c.value() < bound)
                    fail("O(c_i) >= N_1..N_4 (1+2^7)...(1+2^{i+2}) for p=2, i>=5");
            }
        }
        if (rep.order_a.exact()) {
            prev_order_a = rep.order_a.value();
            prev_order_a_exact = true;
        } else {
            prev_order_a_exact = false;
        }
    }
}

}  // namespace detail

// Reports for levels 0..max_level. M_i, O(c_i) and O(a_i) are each computed
// independently, then every order identity that is decidable from the
// available factorizations is cross-checked; a violation throws (it would
// falsify the implementation). Incomplete factorizations degrade the
// affected entries to divisor bounds instead of failing the run.
inline std::vector<OrderReport> order_table(const TowerContext& ctx, int max_level) {
    if (max_level > ctx.max_level())
        throw std::invalid_argument("order_table: level out of range");
    std::vector<OrderReport> table;
    for (int i = 0; i <= max_level; ++i) {
        OrderReport rep;
        rep.p = ctx.p();
        rep.level = i;
        rep.n = ctx.n_value(i);
        rep.n_factorization = ctx.n_factorization(i);
        rep.order_equality_exception = (ctx.p() == 2 && i == 1);

        rep.m = order_mod_subfield_bound(ctx, i);
        if (rep.m.exact())
            rep.m_equals_n = rep.m.value() == rep.n;

        auto [e, e_partial] = order_exponent_partial(ctx, i);
        rep.order_c = element_order_bound(ctx, ctx.canonical_generator(i), e, e_partial);
        rep.order_a = element_order_bound(ctx, ctx.a_const(i), e, e_partial);

        Certainty cert = rep.n_factorization.factors.certainty();
        for (int j = detail::exponent_start_level(ctx.p(), i); j <= i; ++j)
            if (ctx.n_factorization(j).factors.certainty() == Certainty::probable)
                cert = Certainty::probable;
        rep.certainty = cert;

        table.push_back(std::move(rep));
    }
    detail::report_cross_checks(ctx, table);
    return table;
}

inline OrderReport full_report(const TowerContext& ctx, int i) {
    if (i < 0)
        throw std::invalid_argument("full_report: level must be >= 0");
    return order_table(ctx, i).back();
}

// Desk-scale recomputation of the M_i = N_i table for p = 2.
struct MEqualsNRow {
    int level = 0;
    Natural n;
    OrderBound m;
    enum class Status { confirmed, mismatch, factorization_gap } status = Status::factorization_gap;
};

inline std::vector<MEqualsNRow> verify_m_equals_n(const TowerContext& ctx, int lo, int hi) {
    if (ctx.p() != 2)
        throw std::invalid_argument("verify_m_equals_n: defined for p = 2");
    std::vector<MEqualsNRow> rows;
    for (int i = lo; i <= hi; ++i) {
        MEqualsNRow row;
        row.level = i;
        row.n = ctx.n_value(i);
        row.m = order_mod_subfield_bound(ctx, i);
        if (!row.m.exact())
            row.status = MEqualsNRow::Status::factorization_gap;
        else
            row.status = row.m.value() == row.n ? MEqualsNRow::Status::confirmed
                                                : MEqualsNRow::Status::mismatch;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace astower
