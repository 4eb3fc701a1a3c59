#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "astower/tower.hpp"

#include "test_util.hpp"

using namespace astower;
using astower_test::no_factoring;

TEST_CASE("context construction matches the defining recursion") {
    SECTION("p = 2") {
        TowerContext ctx(2, 1, no_factoring());
        CHECK(ctx.n_value(0) == 3);
        CHECK(ctx.n_value(1) == 5);
        // a_0 = c_0 and a_1 = c_0 c_1
        CHECK(ctx.a_const(0) == ctx.canonical_generator(0));
        const TowerElement c0c1 = ctx.mul(ctx.embed(ctx.canonical_generator(0), 1),
                                          ctx.canonical_generator(1));
        CHECK(ctx.a_const(1) == c0c1);
        CHECK(ctx.a_const(-1) == ctx.one(-1));
    }
    SECTION("p = 3") {
        TowerContext ctx(3, 0, no_factoring());
        CHECK(ctx.n_value(0) == 13);
        const TowerElement c0 = ctx.canonical_generator(0);
        CHECK(ctx.a_const(0) == ctx.mul(c0, c0));
    }
    SECTION("p = 2 reaches the last Fermat prime") {
        TowerContext ctx(2, 4, [] {
            TowerOptions o;
            o.factor_n_values = false;
            return o;
        }());
        CHECK(ctx.n_value(4) == 65537);
    }
    SECTION("a_j recursion a_j = a_{j-1} c_j^{p-1}") {
        for (unsigned p : {2u, 3u, 5u}) {
            TowerContext ctx(p, 2, no_factoring());
            for (int j = 0; j <= 2; ++j) {
                const TowerElement lhs = ctx.a_const(j);
                const TowerElement rhs =
                    ctx.mul(ctx.embed(ctx.a_const(j - 1), j),
                            ctx.pow(ctx.canonical_generator(j), Natural{p - 1}));
                CHECK(lhs == rhs);
            }
        }
    }
    SECTION("validation") {
        CHECK_THROWS_AS(TowerContext(4, 1), std::invalid_argument);
        CHECK_THROWS_AS(TowerContext(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(TowerContext(11, 1), std::invalid_argument);  // above default maximum
        CHECK_THROWS_AS(TowerContext(2, -2), std::invalid_argument);
        TowerOptions wide;
        wide.max_prime = 13;
        CHECK_NOTHROW(TowerContext(11, 0, wide));
    }
    SECTION("degenerate tower holds only F_p") {
        TowerContext ctx(5, -1, no_factoring());
        CHECK(ctx.max_level() == -1);
        CHECK(ctx.add(ctx.from_residue(3, -1), ctx.from_residue(4, -1)) == ctx.from_residue(2, -1));
        CHECK(ctx.mul(ctx.from_residue(3, -1), ctx.from_residue(4, -1)) == ctx.from_residue(2, -1));
        CHECK_THROWS_AS(ctx.canonical_generator(0), std::invalid_argument);
    }
}

TEST_CASE("canonical generators") {
    TowerContext ctx2(2, 1, no_factoring());
    CHECK(to_string(ctx2.canonical_generator(0)) == "[0,1]");
    CHECK(ctx2.canonical_generator(-1) == ctx2.one(-1));
    TowerContext ctx3(3, 1, no_factoring());
    const TowerElement c1 = ctx3.canonical_generator(1);
    CHECK(c1.coeff(0).is_zero());
    CHECK(c1.coeff(1) == ctx3.one(0));
    CHECK(c1.coeff(2).is_zero());
    CHECK_THROWS_AS(ctx3.canonical_generator(2), std::invalid_argument);
}

TEST_CASE("additive operations") {
    TowerContext ctx2(2, 1, no_factoring());
    TowerContext ctx3(3, 1, no_factoring());
    const TowerElement c0_2 = ctx2.canonical_generator(0);
    const TowerElement c0_3 = ctx3.canonical_generator(0);

    CHECK(ctx2.add(c0_2, ctx2.zero(0)) == c0_2);
    CHECK(ctx2.add(c0_2, c0_2) == ctx2.zero(0));
    CHECK(ctx3.add(ctx3.add(c0_3, c0_3), c0_3) == ctx3.zero(0));
    CHECK(ctx3.sub(c0_3, c0_3) == ctx3.zero(0));
    CHECK(ctx3.add(c0_3, ctx3.neg(c0_3)) == ctx3.zero(0));
    CHECK_THROWS_AS(ctx2.add(c0_2, ctx2.canonical_generator(1)), std::invalid_argument);
}

TEST_CASE("multiplication reduces by the defining relation") {
    TowerContext ctx2(2, 1, no_factoring());
    const TowerElement c0 = ctx2.canonical_generator(0);
    const TowerElement c1 = ctx2.canonical_generator(1);
    // c_0^2 = c_0 + 1
    CHECK(ctx2.mul(c0, c0) == ctx2.add(c0, ctx2.one(0)));
    // c_1^2 = c_1 + a_0 = c_1 + c_0
    CHECK(ctx2.mul(c1, c1) == ctx2.add(c1, ctx2.embed(c0, 1)));

    TowerContext ctx3(3, 0, no_factoring());
    const TowerElement d0 = ctx3.canonical_generator(0);
    // c_0^3 = c_0 + 1
    CHECK(ctx3.mul(ctx3.mul(d0, d0), d0) == ctx3.add(d0, ctx3.one(0)));
}

TEST_CASE("inverses") {
    SECTION("identity") {
        TowerContext ctx(5, 1, no_factoring());
        CHECK(ctx.inv(ctx.one(1)) == ctx.one(1));
    }
    SECTION("zero is rejected") {
        TowerContext ctx(2, 1, no_factoring());
        CHECK_THROWS_AS(ctx.inv(ctx.zero(1)), std::domain_error);
    }
    SECTION("inverse of c_0 in F_4, against exhaustive search") {
        TowerContext ctx(2, 0, no_factoring());
        const TowerElement c0 = ctx.canonical_generator(0);
        // enumerate the three nonzero elements of L_0
        TowerElement found = ctx.zero(0);
        int hits = 0;
        for (unsigned lo = 0; lo < 2; ++lo)
            for (unsigned hi = 0; hi < 2; ++hi) {
                if (lo == 0 && hi == 0)
                    continue;
                const TowerElement y = parse_element(2, "[" + std::to_string(lo) + "," +
                                                            std::to_string(hi) + "]");
                if (ctx.mul(c0, y) == ctx.one(0)) {
                    found = y;
                    ++hits;
                }
            }
        REQUIRE(hits == 1);
        CHECK(ctx.inv(c0) == found);
        CHECK(found == ctx.add(c0, ctx.one(0)));  // c_0 + 1
    }
    SECTION("inverse of c_0 in F_27, against exhaustive search") {
        TowerContext ctx(3, 0, no_factoring());
        const TowerElement c0 = ctx.canonical_generator(0);
        TowerElement found = ctx.zero(0);
        int hits = 0;
        for (unsigned e0 = 0; e0 < 3; ++e0)
            for (unsigned e1 = 0; e1 < 3; ++e1)
                for (unsigned e2 = 0; e2 < 3; ++e2) {
                    if (e0 == 0 && e1 == 0 && e2 == 0)
                        continue;
                    const TowerElement y =
                        parse_element(3, "[" + std::to_string(e0) + "," + std::to_string(e1) + "," +
                                             std::to_string(e2) + "]");
                    if (ctx.mul(c0, y) == ctx.one(0)) {
                        found = y;
                        ++hits;
                    }
                }
        REQUIRE(hits == 1);
        CHECK(ctx.inv(c0) == found);
        // c_0^2 - 1
        CHECK(found == ctx.sub(ctx.mul(c0, c0), ctx.one(0)));
    }
    SECTION("x * inv(x) = 1 on random elements") {
        std::mt19937_64 rng(7);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            TowerContext ctx(p, p == 2 ? 3 : 1);
            for (int lvl = 0; lvl <= ctx.max_level(); ++lvl)
                for (int t = 0; t < 25; ++t) {
                    const TowerElement x = ctx.random_nonzero(lvl, rng);
                    CHECK(ctx.mul(x, ctx.inv(x)) == ctx.one(lvl));
                }
        }
    }
}

TEST_CASE("powers") {
    TowerContext ctx(2, 1, no_factoring());
    const TowerElement c0 = ctx.canonical_generator(0);
    const TowerElement c1 = ctx.canonical_generator(1);
    CHECK(ctx.pow(c0, Natural{3}) == ctx.one(0));
    CHECK(ctx.pow(c1, Natural{0}) == ctx.one(1));
    CHECK(ctx.pow(c1, Natural{5}) == ctx.embed(c0, 1));
    CHECK_THROWS_AS(ctx.pow(c1, Natural{-2}), std::invalid_argument);
}

TEST_CASE("frobenius") {
    TowerContext ctx(2, 3, no_factoring());
    const TowerElement c1 = ctx.canonical_generator(1);
    CHECK(ctx.frobenius(c1) == ctx.add(c1, ctx.embed(ctx.canonical_generator(0), 1)));
    CHECK(ctx.frobenius(ctx.one(2)) == ctx.one(2));

    SECTION("p^i iterations shift the generator by (-1)^i") {
        for (unsigned p : {2u, 3u}) {
            TowerContext c(p, 2, no_factoring());
            for (int i = 0; i <= 2; ++i) {
                TowerElement y = c.canonical_generator(i);
                std::uint64_t reps = 1;
                for (int k = 0; k < i; ++k)
                    reps *= p;
                for (std::uint64_t k = 0; k < reps; ++k)
                    y = c.frobenius(y);
                const unsigned sign = (i % 2 == 0) ? 1 : p - 1;
                CHECK(y == c.add(c.canonical_generator(i), c.from_residue(sign, i)));
            }
        }
    }
    SECTION("homomorphism and agreement with pow") {
        std::mt19937_64 rng(11);
        for (unsigned p : {2u, 3u, 5u}) {
            TowerContext c(p, 2, no_factoring());
            for (int lvl = 0; lvl <= 2; ++lvl)
                for (int t = 0; t < 10; ++t) {
                    const TowerElement x = c.random_element(lvl, rng);
                    const TowerElement y = c.random_element(lvl, rng);
                    CHECK(c.frobenius(c.add(x, y)) == c.add(c.frobenius(x), c.frobenius(y)));
                    CHECK(c.frobenius(c.mul(x, y)) == c.mul(c.frobenius(x), c.frobenius(y)));
                    CHECK(c.frobenius(x) == c.pow(x, Natural{p}));
                }
        }
    }
}

TEST_CASE("relative frobenius") {
    TowerContext ctx(2, 2, no_factoring());
    const TowerElement c1 = ctx.canonical_generator(1);
    // sigma_1(c_1) = c_1 + (-1)^1 = c_1 + 1
    CHECK(ctx.relative_frobenius(c1) == ctx.add(c1, ctx.one(1)));

    SECTION("fixes the subfield") {
        std::mt19937_64 rng(13);
        for (int i = 0; i <= 2; ++i) {
            const TowerElement y = ctx.embed(ctx.random_element(i - 1, rng), i);
            CHECK(ctx.relative_frobenius(y) == y);
        }
    }
    SECTION("sigma_1(a_1) = c_0 c_1 + c_0 for p = 2") {
        const TowerElement expected =
            ctx.add(ctx.a_const(1), ctx.embed(ctx.canonical_generator(0), 1));
        CHECK(ctx.relative_frobenius(ctx.a_const(1)) == expected);
    }
    SECTION("equals the big-exponent power map") {
        std::mt19937_64 rng(17);
        for (unsigned p : {2u, 3u}) {
            TowerContext c(p, 3, no_factoring());
            for (int i = 0; i <= 3; ++i) {
                std::uint64_t pi = 1;
                for (int k = 0; k < i; ++k)
                    pi *= p;
                const Natural q = nat_pow(Natural{p}, pi);
                for (int t = 0; t < 5; ++t) {
                    const TowerElement x = c.random_element(i, rng);
                    CHECK(c.relative_frobenius(x) == c.pow(x, q));
                }
            }
        }
    }
    SECTION("has order p") {
        std::mt19937_64 rng(19);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            TowerContext c(p, 1, no_factoring());
            for (int i = 0; i <= 1; ++i)
                for (int t = 0; t < 10; ++t) {
                    const TowerElement x = c.random_element(i, rng);
                    TowerElement y = x;
                    for (unsigned k = 0; k < p; ++k)
                        y = c.relative_frobenius(y);
                    CHECK(y == x);
                }
        }
    }
    SECTION("level -1 is rejected") {
        CHECK_THROWS_AS(ctx.relative_frobenius(ctx.one(-1)), std::invalid_argument);
    }
}

TEST_CASE("traces") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        TowerContext ctx(p, p <= 3 ? 2 : 1);
        for (int i = 0; i <= ctx.max_level(); ++i) {
            const PrimeResidue expected = (i % 2 == 0) ? p - 1 : 1;  // (-1)^{i+1} mod p
            CHECK(ctx.trace_to_prime(ctx.a_const(i)) == expected);
        }
    }
    SECTION("embedded subfield elements trace to zero") {
        std::mt19937_64 rng(23);
        TowerContext ctx(3, 2, no_factoring());
        for (int i = 0; i <= 2; ++i)
            for (int t = 0; t < 10; ++t) {
                const TowerElement y = ctx.random_element(i - 1, rng);
                CHECK(ctx.trace_down(ctx.embed(y, i)).is_zero());
            }
    }
    SECTION("trace of c_i^{p-1} one level down is -1") {
        for (unsigned p : {2u, 3u, 5u}) {
            TowerContext ctx(p, 1, no_factoring());
            for (int i = 0; i <= 1; ++i) {
                const TowerElement x = ctx.pow(ctx.canonical_generator(i), Natural{p - 1});
                CHECK(ctx.trace_down(x) == ctx.from_residue(p - 1, i - 1));
            }
        }
    }
}

TEST_CASE("norms") {
    TowerContext ctx(2, 2, no_factoring());
    CHECK(ctx.norm_down(ctx.canonical_generator(1)) == ctx.canonical_generator(0));
    CHECK(ctx.norm_down(ctx.one(2)) == ctx.one(1));
    CHECK(ctx.norm_down(ctx.zero(1)) == ctx.zero(0));

    SECTION("norm of the generator is the defining constant") {
        for (unsigned p : {2u, 3u, 5u}) {
            TowerContext c(p, 2, no_factoring());
            for (int i = 0; i <= 2; ++i)
                CHECK(c.norm_down(c.canonical_generator(i)) == c.a_const(i - 1));
        }
    }
    SECTION("conjugate product equals the exponent route") {
        std::mt19937_64 rng(29);
        for (unsigned p : {2u, 3u, 5u}) {
            TowerContext c(p, 2, no_factoring());
            for (int i = 0; i <= 2; ++i)
                for (int t = 0; t < 10; ++t) {
                    const TowerElement x = c.random_nonzero(i, rng);
                    CHECK(c.norm_down(x) == c.norm_down_via_pow(x));
                }
        }
    }
}

TEST_CASE("subfield membership") {
    TowerContext ctx(2, 2, no_factoring());
    const TowerElement c0 = ctx.canonical_generator(0);
    const TowerElement c1 = ctx.canonical_generator(1);

    CHECK(ctx.is_in_subfield(ctx.embed(c0, 1), 0));
    CHECK_FALSE(ctx.is_in_subfield(c1, 0));
    CHECK(ctx.is_in_subfield(ctx.pow(c1, Natural{5}), 0));  // c_1^5 = c_0
    CHECK(ctx.is_in_subfield(ctx.embed(ctx.one(-1), 2), -1));
    CHECK_FALSE(ctx.is_in_subfield(c1, -1));
    CHECK_THROWS_AS(ctx.is_in_subfield(c1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ctx.is_in_subfield(c1, -2), std::invalid_argument);

    SECTION("equivalent to being fixed by the subfield-size power map") {
        std::mt19937_64 rng(31);
        for (unsigned p : {2u, 3u}) {
            TowerContext c(p, 2, no_factoring());
            for (int i = 1; i <= 2; ++i) {
                std::uint64_t pi = 1;
                for (int k = 0; k <= i - 1; ++k)
                    pi *= p;
                const Natural q = nat_pow(Natural{p}, pi);  // |L_{i-1}|
                for (int t = 0; t < 20; ++t) {
                    const TowerElement x = (t % 2 == 0)
                                               ? c.random_nonzero(i, rng)
                                               : c.embed(c.random_nonzero(i - 1, rng), i);
                    CHECK(c.is_in_subfield(x, i - 1) == (c.pow(x, q) == x));
                }
            }
        }
    }
}

TEST_CASE("embedding") {
    TowerContext ctx(2, 2, no_factoring());
    CHECK(ctx.embed(ctx.one(-1), 2) == ctx.one(2));
    const TowerElement a1 = ctx.mul(ctx.embed(ctx.canonical_generator(0), 1),
                                    ctx.canonical_generator(1));
    CHECK(a1 == ctx.a_const(1));
    CHECK_THROWS_AS(ctx.embed(ctx.one(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(ctx.embed(ctx.one(1), 3), std::invalid_argument);

    SECTION("round trips through lower_to") {
        std::mt19937_64 rng(37);
        for (int j = -1; j <= 1; ++j) {
            const TowerElement x = ctx.random_element(j, rng);
            const TowerElement up = ctx.embed(x, 2);
            CHECK(ctx.is_in_subfield(up, j));
            CHECK(ctx.lower_to(up, j) == x);
        }
    }
    SECTION("lower_to rejects elements outside the subfield") {
        CHECK_THROWS_AS(ctx.lower_to(ctx.canonical_generator(1), 0), std::logic_error);
    }
}

TEST_CASE("serialization") {
    TowerContext ctx(2, 1, no_factoring());
    CHECK(to_string(ctx.canonical_generator(1)) == "[[0,0],[1,0]]");
    CHECK(to_string(ctx.one(-1)) == "1");
    CHECK(to_string(ctx.zero(0)) == "[0,0]");

    SECTION("parse accepts exactly the printed grammar") {
        CHECK(parse_element(2, "[[0,0],[1,0]]") == ctx.canonical_generator(1));
        CHECK(parse_element(2, "1") == ctx.one(-1));
        CHECK_THROWS_AS(parse_element(2, "[0]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, "[0,1,0]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, "[2,0]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, "[0, 1]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, "[0,1] "), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, ""), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(2, "[[0,0],1]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_element(3, "[0,1]"), std::invalid_argument);
    }
    SECTION("round trip on random elements") {
        std::mt19937_64 rng(41);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            TowerContext c(p, 2, no_factoring());
            for (int lvl = -1; lvl <= 2; ++lvl)
                for (int t = 0; t < 20; ++t) {
                    const TowerElement x = c.random_element(lvl, rng);
                    CHECK(parse_element(p, to_string(x)) == x);
                }
        }
    }
}

TEST_CASE("membership-exponent equivalence at small levels") {
    // c_i^m in L_{i-1}  <=>  c_i^{m (N_i - (p^{p^i} - 1))} = a_{i-1}^m
    std::mt19937_64 rng(43);
    for (unsigned p : {2u, 3u}) {
        TowerContext ctx(p, 2, no_factoring());
        for (int i = 0; i <= 2; ++i) {
            std::uint64_t pi = 1;
            for (int k = 0; k < i; ++k)
                pi *= p;
            const Natural gap = ctx.n_value(i) - (nat_pow(Natural{p}, pi) - 1);
            const TowerElement c = ctx.canonical_generator(i);
            const TowerElement a_prev = ctx.embed(ctx.a_const(i - 1), i);
            for (int t = 0; t < 20; ++t) {
                const Natural m = 1 + Natural{rng()} % ctx.n_value(i);
                const bool member = ctx.is_in_subfield(ctx.pow(c, m), i - 1);
                const bool identity = ctx.pow(c, m * gap) == ctx.pow(a_prev, m);
                CHECK(member == identity);
            }
        }
    }
}
