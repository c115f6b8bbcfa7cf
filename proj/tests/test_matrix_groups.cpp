#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "p2census/matrix_groups.hpp"

using namespace p2census;

TEST_CASE("matrix arithmetic basics") {
    FieldCtx F(3, 2);
    auto g = F.generator();
    Mat2 I = Mat2::identity(F);
    Mat2 T = make_T(g);
    CHECK(T.at(0, 0) == g);
    CHECK(T.at(1, 1) == g.pow(3));
    CHECK(T.at(0, 1).is_zero());
    CHECK(I * T == T);
    CHECK(T * T.inverse() == I);
    CHECK(T.det() == g * g.pow(3));
    CHECK(Mat2::identity_like(T) == I);
    CHECK(MatrixGroup::element_order(I) == 1);
    CHECK(MatrixGroup::element_order(T) == 8);

    Mat2 U = make_U(F.one());
    CHECK(U * U == I);
    CHECK((T * U).det() == F.zero() - T.det());

    Mat2 singular(g, g, g, g);
    CHECK_THROWS_AS(singular.inverse(), std::invalid_argument);
    CHECK_THROWS_AS(MatrixGroup::element_order(singular), std::invalid_argument);
    CHECK_THROWS_AS(make_T(F.zero()), std::invalid_argument);
}

// [TRIVIAL] defining relations of the realization, exhaustively for p <= 7:
// U T_alpha U^-1 = T_{alpha^p} and U_beta^2 = T_beta
TEST_CASE("defining relations hold") {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        FieldCtx F(p, 2);
        for (long long al = 0; al < F.unit_order(); ++al) {
            auto alpha = F.from_dlog(al);
            for (long long bl = 0; bl < F.unit_order(); bl += p + 1) {
                auto beta = F.from_dlog(bl);
                Mat2 T = make_T(alpha), U = make_U(beta);
                REQUIRE(U * T * U.inverse() == make_T(alpha.frobenius()));
                REQUIRE(U * U == make_T(beta));
            }
        }
    }
}

TEST_CASE("multiplication matrix represents field multiplication") {
    for (long long p : {2LL, 3LL, 5LL}) {
        FieldCtx F(p, 2);
        for (long long i = 1; i < F.size(); ++i) {
            auto a = F.element(i);
            Mat2 M = multiplication_matrix(a);
            // column j of M is a * basis_j in coordinates (1, x)
            auto x = F.from_coeffs(0, 1);
            auto a1 = a * F.one();
            auto ax = a * x;
            REQUIRE(M.at(0, 0).code() == a1.coeff0());
            REQUIRE(M.at(1, 0).code() == a1.coeff1());
            REQUIRE(M.at(0, 1).code() == ax.coeff0());
            REQUIRE(M.at(1, 1).code() == ax.coeff1());
            REQUIRE(MatrixGroup::element_order(M) == a.order());
        }
        // multiplicativity on a sample
        auto g = F.generator();
        CHECK(multiplication_matrix(g) * multiplication_matrix(g * g) ==
              multiplication_matrix(g.pow(3)));
    }
}

TEST_CASE("closure computes the generated subgroup") {
    FieldCtx F(3, 2);
    auto g = F.generator();
    CHECK(closure({make_T(g)}).order() == 8);
    CHECK(closure({make_T(g.pow(2))}).order() == 4);
    CHECK(closure({Mat2::identity(F)}).order() == 1);
    // <T_gamma, U_1> has the diagonal part of index 2
    MatrixGroup G = closure({make_T(g), make_U(F.one())});
    CHECK(G.order() == 16);
    CHECK(G.contains(make_T(g.pow(5))));
    CHECK(G.contains(make_T(F.from_int(-1)) * make_U(F.one())));
    // off-diagonal members have the shape [[0, x], [x^p, 0]]; U_{-1} does not
    CHECK_FALSE(G.contains(make_U(F.from_int(-1))));
    CHECK_FALSE(G.contains(Mat2(g, g, F.zero(), g)));
    CHECK(G.generators().size() == 2);
    CHECK_THROWS_AS(closure({}), std::invalid_argument);
    CHECK_THROWS_AS(closure({Mat2(g, g, g, g)}), std::invalid_argument);
    CHECK_THROWS_AS(closure({make_T(g)}, 3), std::runtime_error);

    // order statistics of the order-16 dihedral-type group
    auto stats = G.order_statistics();
    CHECK(stats[1] == 1);
    CHECK(stats[8] == 4);
    CHECK(stats.at(2) + stats.at(4) + stats.at(8) + 1 == 16);
}

// |<T_alpha, U_beta>| = 2 * |<alpha, beta>| for every valid pair
TEST_CASE("nonabelian closure order equals twice the joint order") {
    for (long long p : {2LL, 3LL, 5LL}) {
        FieldCtx F(p, 2);
        const long long N = F.unit_order();
        for (long long al = 0; al < N; ++al) {
            if (al % (p + 1) == 0) continue;  // alpha must lie outside F_p
            for (long long bl = 0; bl < N; bl += p + 1) {
                auto alpha = F.from_dlog(al), beta = F.from_dlog(bl);
                const long long c = N / std::gcd(std::gcd(al, bl), N);
                REQUIRE(closure({make_T(alpha), make_U(beta)}).order() == 2 * c);
            }
        }
    }
}

TEST_CASE("isomorphism testing on small groups") {
    FieldCtx F(3, 2);
    auto g = F.generator();
    MatrixGroup C8 = closure({make_T(g)});
    MatrixGroup C8b = closure({make_T(g.pow(3))});
    MatrixGroup D4 = closure({make_T(g.pow(2)), make_U(F.one())});
    MatrixGroup Q8 = closure({make_T(g.pow(2)), make_U(F.from_int(-1))});
    CHECK(is_isomorphic(C8, C8b));
    CHECK_FALSE(is_isomorphic(C8, D4));  // same order 8
    CHECK_FALSE(is_isomorphic(D4, Q8));  // split vs non-split, same order
    CHECK(is_isomorphic(D4, closure({make_U(F.one()), make_T(g.pow(2))})));
    CHECK(is_isomorphic(Q8, closure({make_T(g.pow(2)) * make_U(F.from_int(-1)),
                                     make_U(F.from_int(-1))})));
    CHECK_FALSE(is_isomorphic(C8, closure({make_T(g.pow(4))})));  // different orders

    // Klein four vs C4: two-generator route on abelian groups
    Mat2 d1(F.from_int(-1), F.zero(), F.zero(), F.one());
    Mat2 d2(F.one(), F.zero(), F.zero(), F.from_int(-1));
    MatrixGroup klein = closure({d1, d2});
    MatrixGroup klein2 = closure({d1 * d2, d2});
    MatrixGroup C4 = closure({make_T(g.pow(2))});
    REQUIRE(klein.order() == 4);
    CHECK(is_isomorphic(klein, klein2));
    CHECK_FALSE(is_isomorphic(klein, C4));
}

TEST_CASE("canonical forms of known pairs") {
    FieldCtx F(3, 2);
    auto g = F.generator();
    auto one = F.one(), minus = F.from_int(-1);
    // c = 8 pairs collapse to a single class
    CHECK(canonicalize(g, one) == CanonicalForm{8, 0, 1});
    CHECK(canonicalize(g, minus) == CanonicalForm{8, 0, 1});
    // c = 4 pairs fall into two classes (split and non-split)
    CHECK(canonicalize(g.pow(2), one) == CanonicalForm{4, 0, 2});
    CHECK(canonicalize(g.pow(2), minus) == CanonicalForm{4, 1, 2});
    CHECK(canonicalize(g.pow(2), one) != canonicalize(g.pow(2), minus));

    CHECK_THROWS_AS(canonicalize(g.pow(4), one), std::invalid_argument);  // alpha in F_3
    CHECK_THROWS_AS(canonicalize(g, g), std::invalid_argument);           // beta outside F_3
    CHECK_THROWS_AS(canonicalize(F.zero(), one), std::invalid_argument);
}

// the canonical form is a complete isomorphism invariant: equal form if and
// only if the generated matrix groups are abstractly isomorphic
TEST_CASE("canonical form matches group isomorphism, exhaustive p = 2, 3") {
    for (long long p : {2LL, 3LL}) {
        FieldCtx F(p, 2);
        const long long N = F.unit_order();
        struct Entry {
            CanonicalForm form;
            MatrixGroup group;
        };
        std::vector<Entry> entries;
        for (long long al = 0; al < N; ++al) {
            if (al % (p + 1) == 0) continue;
            for (long long bl = 0; bl < N; bl += p + 1) {
                auto alpha = F.from_dlog(al), beta = F.from_dlog(bl);
                entries.push_back({canonicalize(alpha, beta),
                                   closure({make_T(alpha), make_U(beta)})});
            }
        }
        for (const auto& x : entries)
            for (const auto& y : entries)
                REQUIRE((x.form == y.form) == is_isomorphic(x.group, y.group));
    }
}

// same, by bucket representatives for p = 5 (all-pairs would be slow)
TEST_CASE("canonical form matches group isomorphism, p = 5 representatives") {
    FieldCtx F(5, 2);
    const long long N = F.unit_order();
    std::map<CanonicalForm, MatrixGroup> reps;
    for (long long al = 0; al < N; ++al) {
        if (al % 6 == 0) continue;
        for (long long bl = 0; bl < N; bl += 6) {
            auto alpha = F.from_dlog(al), beta = F.from_dlog(bl);
            CanonicalForm cf = canonicalize(alpha, beta);
            MatrixGroup G = closure({make_T(alpha), make_U(beta)});
            auto it = reps.find(cf);
            if (it == reps.end()) {
                reps.emplace(cf, std::move(G));
            } else {
                // every later pair with the same form stays isomorphic to its
                // bucket representative
                REQUIRE(is_isomorphic(it->second, G));
            }
        }
    }
    // distinct forms give non-isomorphic groups
    for (const auto& [f1, g1] : reps)
        for (const auto& [f2, g2] : reps) {
            if (f1 < f2) REQUIRE_FALSE(is_isomorphic(g1, g2));
        }
}

// diagonal change of basis: M_j U_beta M_j^-1 = V_j with j = dlog(beta)/(p+1)
TEST_CASE("conjugation into the canonical off-diagonal form") {
    for (long long p : {3LL, 5LL, 7LL}) {
        FieldCtx F(p, 2);
        auto g0 = F.generator();
        for (long long bl = 0; bl < F.unit_order(); bl += p + 1) {
            auto beta = F.from_dlog(bl);
            const long long j = bl / (p + 1);
            Mat2 M(F.one(), F.zero(), F.zero(), g0.pow(j * p));
            Mat2 V(F.zero(), g0.pow(j), g0.pow(j * p), F.zero());
            REQUIRE(M * make_U(beta) * M.inverse() == V);
            // diagonal conjugation fixes every T_alpha
            REQUIRE(M * make_T(g0) * M.inverse() == make_T(g0));
        }
    }
}
