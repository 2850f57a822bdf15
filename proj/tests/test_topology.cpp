#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polyadic/character.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/grid.hpp"

#include <random>

using namespace polyadic;

TEST_CASE("grid membership") {
    const Grid g(5, PolyadicInt::embed(3, 6));
    CHECK(g.contains(PolyadicInt::embed(13, 6)));
    CHECK(!g.contains(PolyadicInt::embed(12, 6)));

    // Any member serves as a center.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> probes(-4000, 4000);
    const Grid recentered(5, PolyadicInt::embed(13, 6));
    for (int t = 0; t < 100; ++t) {
        const PolyadicInt x = PolyadicInt::embed(probes(rng), 6);
        CHECK(g.contains(x) == recentered.contains(x));
    }
    CHECK(g == recentered);

    // Width 7 is not determined at depth 4.
    CHECK_THROWS_AS(Grid(7, PolyadicInt::embed(3, 4)), insufficient_depth);
    CHECK_THROWS_AS(Grid(5, PolyadicInt::embed(3, 6)).contains(PolyadicInt::embed(1, 2)),
                    insufficient_depth);
}

TEST_CASE("partitions cover exactly once") {
    for (std::int64_t n : {1, 2, 3, 6, 7, 12}) {
        const auto grids = partition(n);
        CHECK(grids.size() == static_cast<std::size_t>(n));
        const unsigned depth = grids.front().center().depth();
        for (std::int64_t m = -20; m <= 20; ++m) {
            const PolyadicInt probe = PolyadicInt::embed(m, depth);
            int hits = 0;
            for (const Grid& g : grids) {
                if (g.contains(probe)) {
                    ++hits;
                }
            }
            CHECK(hits == 1);
        }
    }

    // The trivial partition has one all-containing grid.
    const auto trivial = partition(1);
    CHECK(trivial.size() == 1);
    CHECK(trivial.front().contains(PolyadicInt::embed(-17, 3)));
}

TEST_CASE("partition(6) refines partition(2) and partition(3)") {
    const auto sixes = partition(6);
    const auto twos = partition(2, 2);
    const auto threes = partition(3, 2);
    for (std::int64_t m = -20; m <= 20; ++m) {
        const PolyadicInt probe = PolyadicInt::embed(m, 2);
        const Grid* six = nullptr;
        for (const Grid& g : sixes) {
            if (g.contains(probe)) {
                six = &g;
            }
        }
        REQUIRE(six != nullptr);
        // The residue class mod 6 reduces to the containing classes mod 2 and 3.
        for (const Grid& g : twos) {
            CHECK(g.contains(probe) == (g.center_residue() == six->center_residue() % 2));
        }
        for (const Grid& g : threes) {
            CHECK(g.contains(probe) == (g.center_residue() == six->center_residue() % 3));
        }
    }
}

TEST_CASE("refinement splits a grid into the next factorial level") {
    {
        const auto children = refine(2, 1);
        REQUIRE(children.size() == 3);
        for (const Grid& child : children) {
            CHECK(child.width() == 6);
        }
        CHECK(children[0].center_residue() == 1);
        CHECK(children[1].center_residue() == 3);
        CHECK(children[2].center_residue() == 5);
    }
    {
        const auto children = refine(1, 0);
        REQUIRE(children.size() == 2);
        CHECK(children[0].center_residue() == 0);
        CHECK(children[1].center_residue() == 1);
        CHECK(children[0].width() == 2);
    }
    CHECK_THROWS_AS(refine(2, 2), index_out_of_range);
    CHECK_THROWS_AS(refine(3, -1), index_out_of_range);

    for (unsigned n = 1; n <= 4; ++n) {
        const BigInt base = factorial(n);
        for (BigInt k = 0; k < base; ++k) {
            const Grid parent(base, PolyadicInt::embed(k, n));
            const auto children = refine(n, k);
            CHECK(children.size() == n + 1);
            for (std::int64_t m = -30; m <= 30; ++m) {
                const PolyadicInt probe = PolyadicInt::embed(m, n);
                int hits = 0;
                for (const Grid& child : children) {
                    if (child.contains(probe)) {
                        ++hits;
                    }
                }
                CHECK(hits == (parent.contains(probe) ? 1 : 0));
            }
        }
    }
}

TEST_CASE("absorbed-or-disjoint alternative") {
    CHECK(grids_relation(Grid(2, PolyadicInt::embed(0, 4)), Grid(6, PolyadicInt::embed(4, 4))) ==
          GridRelation::Absorbed);
    CHECK(grids_relation(Grid(2, PolyadicInt::embed(1, 4)), Grid(6, PolyadicInt::embed(4, 4))) ==
          GridRelation::Disjoint);
    CHECK_THROWS_AS(
        grids_relation(Grid(4, PolyadicInt::embed(0, 4)), Grid(6, PolyadicInt::embed(0, 4))),
        width_mismatch);

    for (std::int64_t p : {2, 3, 4}) {
        for (std::int64_t q : {1, 2, 3}) {
            const unsigned depth = *min_depth_for_modulus(p * q);
            for (std::int64_t a = 0; a < p; ++a) {
                for (std::int64_t c = 0; c < p * q; ++c) {
                    const Grid outer(p, PolyadicInt::embed(a, depth));
                    const Grid inner(p * q, PolyadicInt::embed(c, depth));
                    const GridRelation rel = grids_relation(outer, inner);
                    for (std::int64_t m = -30; m <= 30; ++m) {
                        const PolyadicInt probe = PolyadicInt::embed(m, depth);
                        if (!inner.contains(probe)) {
                            continue;
                        }
                        CHECK(outer.contains(probe) == (rel == GridRelation::Absorbed));
                    }
                }
            }
        }
    }
}

TEST_CASE("grid intersections follow the congruence lattice") {
    {
        const auto meet = intersect(Grid(2, PolyadicInt::embed(1, 4)),
                                    Grid(3, PolyadicInt::embed(2, 4)));
        REQUIRE(meet.has_value());
        CHECK(meet->width() == 6);
        CHECK(meet->center_residue() == 5);
    }
    CHECK(!intersect(Grid(2, PolyadicInt::embed(0, 4)), Grid(4, PolyadicInt::embed(1, 4)))
               .has_value());
    {
        const Grid g(7, PolyadicInt::embed(4, 8));
        const auto meet = intersect(g, g);
        REQUIRE(meet.has_value());
        CHECK(*meet == g);
    }

    for (std::int64_t m = 1; m <= 12; ++m) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            for (std::int64_t a = 0; a < m; ++a) {
                for (std::int64_t c = 0; c < n; ++c) {
                    const Grid ga(m, PolyadicInt::embed(a, *min_depth_for_modulus(m)));
                    const Grid gc(n, PolyadicInt::embed(c, *min_depth_for_modulus(n)));
                    const auto meet = intersect(ga, gc);
                    const auto expected = oracle::brute_crt(m, a, n, c);
                    CHECK(meet.has_value() == expected.has_value());
                    if (meet && expected) {
                        CHECK(meet->width() == std::lcm(m, n));
                        CHECK(meet->center_residue() == *expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("the zero grids form a neighborhood base at finite depth") {
    for (unsigned depth = 1; depth <= 6; ++depth) {
        const BigInt mod = factorial(depth + 1);
        const auto divisors = factorial_divisors(depth + 1);
        for (const BigInt& n : divisors) {
            const Grid zero_grid(n, PolyadicInt::embed(0, depth));
            // Members are exactly the multiples of n in [0, (K+1)!).
            std::vector<PolyadicInt> members;
            for (BigInt x = 0; x < mod; ++x) {
                const PolyadicInt alpha = PolyadicInt::embed(x, depth);
                CHECK(zero_grid.contains(alpha) == (x % n == 0));
                if (x % n == 0) {
                    members.push_back(alpha);
                }
                // Absorbs products with anything.
                if (x % n == 0) {
                    CHECK(zero_grid.contains(alpha * PolyadicInt::embed(x + 1, depth)));
                }
            }
            for (const PolyadicInt& alpha : members) {
                CHECK(zero_grid.contains(-alpha)); // symmetric
            }
            if (depth <= 4) {
                // Exhaustive pairwise closure under addition.
                for (const PolyadicInt& a : members) {
                    for (const PolyadicInt& b : members) {
                        CHECK(zero_grid.contains(a + b));
                    }
                }
            } else {
                for (std::size_t i = 0; i < members.size(); ++i) {
                    CHECK(zero_grid.contains(members[i] + members[(i * 7 + 1) % members.size()]));
                }
            }
        }

        // Only zero lies in every zero grid.
        for (BigInt x = 0; x < mod; ++x) {
            const PolyadicInt alpha = PolyadicInt::embed(x, depth);
            bool in_all = true;
            for (const BigInt& n : divisors) {
                in_all = in_all && Grid(n, PolyadicInt::embed(0, depth)).contains(alpha);
            }
            CHECK(in_all == (x == 0));
        }
    }
}

TEST_CASE("zero grids shrink as the width grows through divisibility") {
    const unsigned depth = 6;
    const BigInt mod = factorial(depth + 1);
    const auto divisors = factorial_divisors(depth + 1);
    for (const BigInt& p : divisors) {
        for (const BigInt& n : divisors) {
            if (n % p != 0) {
                continue;
            }
            const Grid narrow(n, PolyadicInt::embed(0, depth));
            const Grid wide(p, PolyadicInt::embed(0, depth));
            for (BigInt x = 0; x < mod; x += n) {
                const PolyadicInt alpha = PolyadicInt::embed(x, depth);
                CHECK(narrow.contains(alpha));
                CHECK(wide.contains(alpha));
            }
        }
    }
}

TEST_CASE("integer points are dense: every grid contains one") {
    std::mt19937_64 rng(11);
    const unsigned depth = 7;
    for (const BigInt& n : factorial_divisors(depth + 1)) {
        for (int t = 0; t < 5; ++t) {
            std::vector<std::uint32_t> digits(depth);
            for (unsigned r = 1; r <= depth; ++r) {
                digits[r - 1] = std::uniform_int_distribution<std::uint32_t>(0, r)(rng);
            }
            const PolyadicInt center = PolyadicInt::from_digits(FactorialDigits(digits));
            const Grid g(n, center);
            CHECK(g.contains(PolyadicInt::embed(center.residue_mod(n), depth)));
        }
    }
}

TEST_CASE("grid membership mirrors cluster membership") {
    std::mt19937_64 rng(13);
    const unsigned depth = 8;
    const auto divisors = factorial_divisors(depth + 1);
    for (int t = 0; t < 60; ++t) {
        std::vector<std::uint32_t> da(depth), db(depth);
        for (unsigned r = 1; r <= depth; ++r) {
            da[r - 1] = std::uniform_int_distribution<std::uint32_t>(0, r)(rng);
            db[r - 1] = std::uniform_int_distribution<std::uint32_t>(0, r)(rng);
        }
        const PolyadicInt a = PolyadicInt::from_digits(FactorialDigits(da));
        const PolyadicInt b = PolyadicInt::from_digits(FactorialDigits(db));
        const Character phi = Character::char_of(a);
        const Character psi = Character::char_of(b);
        for (const BigInt& n : divisors) {
            CHECK(phi.cluster_equal(psi, n) == Grid(n, b).contains(a));
        }
    }
}
