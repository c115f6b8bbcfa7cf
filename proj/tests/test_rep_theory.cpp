#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "p2census/rep_theory.hpp"

using namespace p2census;

namespace {

// orbit length of x under multiplication by g modulo m, by direct walk
long long orbit_length(long long x, long long g, long long m) {
    long long cur = mul_mod(x, g, m), len = 1;
    while (cur != x % m) {
        cur = mul_mod(cur, g, m);
        ++len;
    }
    return len;
}

}  // namespace

TEST_CASE("group presentation is validated") {
    CHECK_NOTHROW(MetacyclicGroup(2, 1, 3, 2));
    CHECK_NOTHROW(MetacyclicGroup(3, 1, 8, 2));
    CHECK_NOTHROW(MetacyclicGroup(5, 2, 1, 1));
    CHECK_THROWS_AS(MetacyclicGroup(4, 1, 3, 2), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(MetacyclicGroup(3, 1, 6, 2), std::invalid_argument);  // p | e
    CHECK_THROWS_AS(MetacyclicGroup(2, 1, 5, 2), std::invalid_argument);  // 5 does not divide 2^2-1
    CHECK(MetacyclicGroup(2, 1, 3, 2).q() == 2);
    CHECK(MetacyclicGroup(3, 2, 8, 1).q() == 9);
    CHECK(MetacyclicGroup(2, 1, 3, 2).order() == 6);
}

// [PAPER] the order-6 group with q = 2 has classes (1,0,0), (1,0,1), (3,1,0)
// of dimensions 1, 1, 2
TEST_CASE("classes of the order-6 group, q = 2") {
    MetacyclicGroup H(2, 1, 3, 2);
    auto cls = enumerate_irreducibles(H);
    REQUIRE(cls.size() == 3);
    CHECK(cls[0].t == 1);
    CHECK(cls[0].a == 0);
    CHECK(cls[0].b == 0);
    CHECK(cls[0].is_trivial());
    CHECK(cls[1].t == 1);
    CHECK(cls[1].b == 1);
    CHECK(cls[2].t == 3);
    CHECK(cls[2].a == 1);
    CHECK(cls[2].b == 0);
    CHECK(cls[2].r == 2);
    CHECK(cls[2].s == 2);
    CHECK(cls[2].u_tilde == 1);
    CHECK(rep_dimension(cls[0], 1) == 1);
    CHECK(rep_dimension(cls[1], 1) == 1);
    CHECK(rep_dimension(cls[2], 1) == 2);

    LocalFieldParams K(2, 1, 1);
    auto inv = module_inventory(H, K);
    REQUIRE(inv.rows.size() == 3);
    CHECK(inv.trivial_summand);
    CHECK(inv.cyclotomic_summand);
    CHECK(inv.rows[0].multiplicity == 1);
    CHECK(inv.rows[1].multiplicity == 1);
    CHECK(inv.rows[2].multiplicity == 2);
    CHECK(inv.rows[2].dim_fpbar == 2);
    CHECK(inv.rows[2].def_field_degree == 1);
}

// [DERIVED] e = 8, f = 2, q = 3: seven classes, three of dimension 2
TEST_CASE("classes of the order-16 group, q = 3") {
    MetacyclicGroup H(3, 1, 8, 2);
    auto cls = enumerate_irreducibles(H);
    REQUIRE(cls.size() == 7);
    long long dim2 = 0;
    for (const auto& c : cls)
        if (rep_dimension(c, 1) == 2) ++dim2;
    CHECK(dim2 == 3);
    // the two t = 8 orbits are {1,3} and {5,7}, canonicalized to 1 and 5
    CHECK(cls[5].t == 8);
    CHECK(cls[5].a == 1);
    CHECK(cls[6].t == 8);
    CHECK(cls[6].a == 5);
}

// [DERIVED] even residue case: q = 4 fixes the characters of order 3, so the
// t = 3 stratum contributes two classes of s = 1 defined over F_4
TEST_CASE("classes of the order-3 group, q = 4") {
    MetacyclicGroup H(2, 2, 3, 1);
    auto cls = enumerate_irreducibles(H);
    REQUIRE(cls.size() == 3);
    CHECK(cls[1].t == 3);
    CHECK(cls[1].a == 1);
    CHECK(cls[2].t == 3);
    CHECK(cls[2].a == 2);
    CHECK(cls[1].s == 1);
    CHECK(cls[1].r == 2);
    CHECK(rep_dimension(cls[1], 2) == 2);       // F_p-dimension doubles
    CHECK(def_field_degree(cls[1], 2) == 2);    // defined over F_4, not F_2
}

// [DERIVED] w > 1: a faithful character of U = Z/3 over F_2 needs F_4
TEST_CASE("beta of order 3 in characteristic 2") {
    MetacyclicGroup H(2, 1, 1, 3);
    auto cls = enumerate_irreducibles(H);
    REQUIRE(cls.size() == 3);
    CHECK(cls[0].is_trivial());
    CHECK(cls[1].beta_order() == 3);
    CHECK(cls[1].w == 2);
    CHECK(rep_dimension(cls[1], 1) == 2);
    CHECK(cls[2].beta_order() == 3);  // b = 2 also has order 3
}

TEST_CASE("enumeration invariants over a parameter sweep") {
    for (long long p : {2LL, 3LL, 5LL}) {
        for (long long fk : {1LL, 2LL}) {
            for (long long e = 1; e <= 40; ++e) {
                if (std::gcd(e, p) != 1) continue;
                for (long long f : {1LL, 2LL, 3LL, 4LL, 6LL}) {
                    if (pow_mod(p, fk * f, e) != 1 % e) continue;
                    MetacyclicGroup H(p, fk, e, f);
                    auto cls = enumerate_irreducibles(H);
                    const long long q = pow_mod(p, fk, e == 1 ? 2 : e);

                    std::set<std::tuple<long long, long long, long long>> seen;
                    BigInt weight = 0;
                    for (const auto& c : cls) {
                        REQUIRE(e % c.t == 0);
                        REQUIRE(c.b >= 0);
                        REQUIRE(c.b < c.u_tilde);
                        REQUIRE((c.t == 1) == (c.a == 0));
                        if (c.t > 1) REQUIRE(std::gcd(c.a, c.t) == 1);
                        // r, s, u~ recomputed from scratch
                        REQUIRE(c.r == mult_order(p, c.t));
                        REQUIRE(c.s == c.r / std::gcd(c.r, fk));
                        REQUIRE(c.u_tilde * c.s == f);
                        // canonical representative is the least in its q-orbit
                        if (c.t > 1) {
                            long long cur = c.a;
                            for (long long i = 1; i < c.s; ++i) {
                                cur = mul_mod(cur, q % c.t, c.t);
                                REQUIRE(cur > c.a);
                            }
                            REQUIRE(orbit_length(c.a, pow_mod(p, fk, c.t), c.t) == c.s);
                        }
                        seen.insert({c.t, c.a, c.b});
                        weight += BigInt(c.s) * c.s;
                        // dimension relations
                        REQUIRE(rep_dimension(c, fk) ==
                                c.s * def_field_degree(c, fk));
                        REQUIRE(rep_dimension(c, fk) % c.r == 0);
                    }
                    REQUIRE((long long)seen.size() == (long long)cls.size());
                    REQUIRE(std::is_sorted(cls.begin(), cls.end(),
                                           [](const CharClass& x, const CharClass& y) {
                                               return std::tuple(x.t, x.a, x.b) <
                                                      std::tuple(y.t, y.a, y.b);
                                           }));
                    // formal character count: sum of s^2 equals |H|
                    REQUIRE(weight == BigInt(e) * f);
                }
            }
        }
    }
}

TEST_CASE("multiplicity scales with the base degree") {
    MetacyclicGroup H(3, 1, 8, 2);
    for (long long ek : {1LL, 2LL, 3LL}) {
        LocalFieldParams K(3, ek, 1);
        auto inv = module_inventory(H, K);
        BigInt total = 0;
        for (const auto& row : inv.rows) {
            CHECK(row.multiplicity == BigInt(row.char_class.s) * K.n());
            total += row.multiplicity * row.dim_fpbar;
        }
        // the isotypic part of Y accounts for |H|*n over the closure
        CHECK(total == BigInt(H.order()) * K.n());
    }
    CHECK_THROWS_AS(module_inventory(H, LocalFieldParams(5, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(module_inventory(H, LocalFieldParams(3, 1, 2)), std::invalid_argument);
}

TEST_CASE("submodule counts") {
    CHECK(submodule_count(1, 1, 5) == 1);
    CHECK(submodule_count(1, 2, 3) == 4);   // lines in (F_3)^2
    CHECK(submodule_count(2, 2, 2) == 5);   // F_4-lines in (F_4)^2
    CHECK(submodule_count(1, 2, 2) == 3);
    CHECK(submodule_count(2, 1, 7) == 1);
    CHECK(submodule_count(1, 3, 2) == 7);
    CHECK_THROWS_AS(submodule_count(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(submodule_count(1, 1, 6), std::invalid_argument);

    // brute count of F_p-lines in (F_p)^m for d = 1
    for (long long p : {2LL, 3LL, 5LL}) {
        for (long long m : {1LL, 2LL, 3LL}) {
            // nonzero vectors up to scalar
            BigInt vectors = pow_big(p, m) - 1;
            CHECK(submodule_count(1, m, p) == vectors / (p - 1));
        }
    }
}
