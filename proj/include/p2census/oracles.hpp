#ifndef P2CENSUS_ORACLES_HPP
#define P2CENSUS_ORACLES_HPP

// Brute-force reimplementations of every counted quantity. Each oracle works
// by direct enumeration and never calls the closed-form code path it exists
// to validate; the only shared code is the finite-field layer and
// submodule_count (which converts orbit counts into class counts on both
// routes). Used by the test suite and by the CLI verify subcommand.

#include "p2census/census.hpp"
#include "p2census/finite_field.hpp"
#include "p2census/local_field.hpp"
#include "p2census/matrix_groups.hpp"
#include "p2census/numtheory.hpp"
#include "p2census/rep_theory.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2census {

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyOutcome {
    std::string suite;
    std::int64_t cases = 0;
    std::vector<VerifyFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Counts pairs of joint order exactly a in Z/a x Z/b.
inline BigInt oracle_psi(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("oracle_psi: arguments must be positive");
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < a; ++x) {
        const std::int64_t ox = a / std::gcd(x, a);
        for (std::int64_t y = 0; y < b; ++y) {
            const std::int64_t oy = b / std::gcd(y, b);
            if (std::lcm(ox, oy) == a) ++count;
        }
    }
    return count;
}

/// Enumerates all pairs (alpha, beta) in F_{p^2}^x x F_p^x of joint order c
/// and returns the fraction with beta inside <gamma^{p+1}>, gamma a generator
/// of <alpha, beta>. Membership is decided by walking the subgroup.
inline Rational oracle_lambda_fraction(std::int64_t c, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("oracle_lambda_fraction: p must be prime");
    if (p > 13) throw std::invalid_argument("oracle_lambda_fraction: p must be at most 13");
    const std::int64_t N = p * p - 1;
    if (c < 1 || N % c != 0)
        throw std::invalid_argument("oracle_lambda_fraction: c must divide p^2 - 1");
    if ((p - 1) % c == 0)
        throw std::invalid_argument("oracle_lambda_fraction: c must not divide p - 1");
    const FieldCtx F(p, 2);
    std::int64_t total = 0, inside = 0;
    for (std::int64_t al = 0; al < N; ++al) {
        const FqElem alpha = F.from_dlog(al);
        for (std::int64_t bl = 0; bl < N; bl += p + 1) {
            const FqElem beta = F.from_dlog(bl);
            if (std::lcm(alpha.order(), beta.order()) != c) continue;
            ++total;
            const std::int64_t m = std::gcd(std::gcd(al, bl), N);  // gamma = gamma0^m
            // walk <gamma^{p+1}> = {gamma0^{m(p+1)k}} looking for beta
            const std::int64_t step = m * (p + 1) % N;
            std::int64_t cur = 0;
            bool member = false;
            do {
                member = member || cur == bl;
                cur = (cur + step) % N;
            } while (cur != 0);
            if (member) ++inside;
        }
    }
    const BigInt denominator = oracle_psi(c, p - 1);
    if (BigInt(total) != denominator)
        throw std::logic_error("oracle_lambda_fraction: pair count disagrees with oracle_psi");
    return Rational(BigInt(inside), denominator);
}

/// Irreducibility of the 2-dimensional realization attached to a pair.
/// Non-abelian case (odd parity, alpha outside F_p, beta in F_p^x): T_alpha
/// must have distinct eigenvalues and U_beta must swap the coordinate axes.
/// Cyclic case: multiplication by alpha and beta on the plane F_{p^2} must
/// fix no common F_p-line; all p+1 lines are tested.
inline bool oracle_irreducible_dim2(const FqElem& alpha, const FqElem& beta, Parity parity) {
    alpha.require_same(beta);
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("oracle_irreducible_dim2: zero element");
    if (alpha.field_degree() != 2)
        throw std::invalid_argument("oracle_irreducible_dim2: need F_{p^2} elements");
    const std::int64_t p = alpha.char_p();
    if (parity == Parity::odd && !alpha.in_prime_field() && beta.in_prime_field()) {
        const Mat2 U = make_U(beta);
        const bool distinct_eigenvalues = alpha != alpha.frobenius();
        const bool swaps_axes = U.at(0, 0).is_zero() && !U.at(1, 0).is_zero() &&
                                U.at(1, 1).is_zero() && !U.at(0, 1).is_zero();
        return distinct_eigenvalues && swaps_axes;
    }
    // cyclic route: alpha and beta act on the plane F_{p^2} by multiplication
    // matrices over F_p; reducible means some of the p+1 lines is fixed by both
    const Mat2 Ma = multiplication_matrix(alpha);
    const Mat2 Mb = multiplication_matrix(beta);
    auto fixes_line = [&](const Mat2& M, std::int64_t v0, std::int64_t v1) {
        const FqElem x0 = alpha.with_coeffs(v0, 0), x1 = alpha.with_coeffs(v1, 0);
        const FqElem w0 = M.at(0, 0) * x0 + M.at(0, 1) * x1;
        const FqElem w1 = M.at(1, 0) * x0 + M.at(1, 1) * x1;
        return (w0 * x1 - w1 * x0).is_zero();
    };
    // line representatives: (1, 0) and (c0, 1), c0 in F_p
    if (fixes_line(Ma, 1, 0) && fixes_line(Mb, 1, 0)) return false;
    for (std::int64_t c0 = 0; c0 < p; ++c0)
        if (fixes_line(Ma, c0, 1) && fixes_line(Mb, c0, 1)) return false;
    return true;
}

/// Identifies the Galois group descriptor of a dim-2 pair by building the
/// actual matrix group and comparing it, by abstract isomorphism, against
/// reference groups constructed from canonical parameters.
inline GroupDescriptor oracle_group_class(const FqElem& alpha, const FqElem& beta, Parity parity) {
    alpha.require_same(beta);
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("oracle_group_class: zero element");
    if (alpha.field_degree() != 2)
        throw std::invalid_argument("oracle_group_class: need F_{p^2} elements");
    const std::int64_t p = alpha.char_p();
    if (p > 7) throw std::invalid_argument("oracle_group_class: p must be at most 7");
    const std::int64_t N = alpha.field_units();
    const FqElem gamma0 = alpha.field_generator();
    const bool a_in = alpha.in_prime_field();
    const bool b_in = beta.in_prime_field();

    const bool nonabelian_case = parity == Parity::odd && !a_in && b_in;
    const bool cyclic_case =
        parity == Parity::even ? !(a_in && b_in) : (a_in && !b_in);

    if (nonabelian_case) {
        const MatrixGroup G = closure({make_T(alpha), make_U(beta)});
        if (G.order() % 2 != 0)
            throw std::logic_error("oracle_group_class: odd order in the non-abelian case");
        const std::int64_t c = G.order() / 2;
        if (N % c != 0) throw std::logic_error("oracle_group_class: c does not divide p^2 - 1");
        const FqElem gc = gamma0.pow(N / c);
        const MatrixGroup ref_split = closure({make_T(gc), make_U(beta.pow(0))});
        if (is_isomorphic(G, ref_split)) return GroupDescriptor::make_metacyclic2(c, true);
        // canonical non-split witness: least power of gc lying in F_p^x but
        // not in <gc^{p+1}> (membership by walking exponents mod c)
        std::vector<char> in_sub(static_cast<std::size_t>(c), 0);
        std::int64_t cur = 0;
        do {
            in_sub[static_cast<std::size_t>(cur)] = 1;
            cur = (cur + p + 1) % c;
        } while (cur != 0);
        std::int64_t witness = -1;
        for (std::int64_t k = 1; k < c && witness == -1; ++k)
            if (!in_sub[static_cast<std::size_t>(k)] && gc.pow(k).in_prime_field()) witness = k;
        if (witness == -1)
            throw std::logic_error("oracle_group_class: no non-split reference exists for this c");
        const MatrixGroup ref_nonsplit = closure({make_T(gc), make_U(gc.pow(witness))});
        if (is_isomorphic(G, ref_nonsplit)) return GroupDescriptor::make_metacyclic2(c, false);
        throw std::logic_error("oracle_group_class: group matches no reference");
    }
    if (cyclic_case) {
        const MatrixGroup G = closure({multiplication_matrix(alpha), multiplication_matrix(beta)});
        const std::int64_t c = G.order();
        if (N % c != 0 || (p - 1) % c == 0)
            throw std::logic_error("oracle_group_class: invalid cyclic order");
        const MatrixGroup ref = closure({multiplication_matrix(gamma0.pow(N / c))});
        if (!is_isomorphic(G, ref))
            throw std::logic_error("oracle_group_class: cyclic identification failed");
        return GroupDescriptor::make_cyclic(c);
    }
    throw std::invalid_argument("oracle_group_class: pair is not 2-dimensional");
}

/// Recomputes a census report by raw enumeration: every character pair is
/// classified through oracle_group_class, orbit counts are halved, and each
/// orbit is weighted by the submodule count of its isotypic block.
inline CensusReport oracle_census(const LocalFieldParams& K) {
    const std::int64_t p = K.p;
    if (p > 7) throw std::invalid_argument("oracle_census: p must be at most 7");
    if (K.n() > 4) throw std::invalid_argument("oracle_census: n too large for brute force");
    const std::int64_t n = K.n();
    const FieldCtx F(p, 2);
    const std::int64_t N = F.unit_order();
    const Parity parity = K.parity();

    std::map<GroupDescriptor, std::int64_t> raw;
    auto visit = [&](std::int64_t al, std::int64_t bl) {
        ++raw[oracle_group_class(F.from_dlog(al), F.from_dlog(bl), parity)];
    };
    if (parity == Parity::even) {
        for (std::int64_t al = 0; al < N; ++al)
            for (std::int64_t bl = 0; bl < N; ++bl) {
                if (al % (p + 1) == 0 && bl % (p + 1) == 0) continue;
                visit(al, bl);
            }
    } else {
        for (std::int64_t al = 0; al < N; al += p + 1)
            for (std::int64_t bl = 0; bl < N; ++bl) {
                if (bl % (p + 1) != 0) visit(al, bl);
            }
        for (std::int64_t al = 0; al < N; ++al) {
            if (al % (p + 1) == 0) continue;
            for (std::int64_t bl = 0; bl < N; bl += p + 1) visit(al, bl);
        }
    }

    CensusReport rep{K, {}, 0, 0, p * p};
    for (const auto& [desc, pairs] : raw) {
        if (pairs % 2 != 0) throw std::logic_error("oracle_census: odd raw pair count");
        const std::int64_t orbits = pairs / 2;
        const bool cyclic = desc.kind == GroupDescriptor::Kind::cyclic;
        const BigInt count =
            BigInt(orbits) * (cyclic ? submodule_count(2, n, p) : submodule_count(1, 2 * n, p));
        rep.rows.push_back({desc, count});
        rep.total_classes += count;
    }
    rep.total_extensions = BigInt(p) * p * rep.total_classes;
    return rep;
}

namespace detail {

inline std::string describe_pair(const FqElem& alpha, const FqElem& beta, Parity parity) {
    std::ostringstream os;
    os << "p=" << alpha.char_p() << (parity == Parity::even ? " even" : " odd") << " pair (dlog "
       << alpha.dlog() << ", dlog " << beta.dlog() << ")";
    return os.str();
}

inline std::string describe_group(const GroupDescriptor& g) {
    std::ostringstream os;
    if (g.kind == GroupDescriptor::Kind::cyclic)
        os << "cyclic(c=" << g.c << ")";
    else
        os << "metacyclic2(c=" << g.c << ", " << (g.split ? "split" : "non-split") << ")";
    return os.str();
}

inline std::string describe_report(const CensusReport& r) {
    std::ostringstream os;
    for (const CensusRow& row : r.rows)
        os << describe_group(row.group) << "=" << row.count.str() << " ";
    os << "total=" << r.total_classes.str();
    return os.str();
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace detail

/// psi formula vs enumeration on the full grid 1 <= a, b <= 64.
inline VerifyOutcome verify_psi() {
    VerifyOutcome out{"psi", 0, {}};
    for (std::int64_t a = 1; a <= 64; ++a)
        for (std::int64_t b = 1; b <= 64; ++b) {
            ++out.cases;
            const BigInt expected = oracle_psi(a, b);
            const BigInt got = psi(a, b);
            if (expected != got)
                out.failures.push_back({"psi(" + std::to_string(a) + ", " + std::to_string(b) + ")",
                                        expected.str(), got.str()});
        }
    return out;
}

/// lambda_split vs enumeration for every valid c, over primes <= min(max_p, 13).
inline VerifyOutcome verify_lambda(std::int64_t max_p = 13) {
    VerifyOutcome out{"lambda", 0, {}};
    for (std::int64_t p : detail::primes_up_to(std::min<std::int64_t>(max_p, 13))) {
        for (std::int64_t c : divisors(p * p - 1)) {
            if ((p - 1) % c == 0) continue;
            ++out.cases;
            const Rational expected = oracle_lambda_fraction(c, p);
            const Rational got = lambda_split(c, p);
            if (expected != got) {
                std::ostringstream os, es, gs;
                os << "lambda(c=" << c << ", p=" << p << ")";
                es << expected;
                gs << got;
                out.failures.push_back({os.str(), es.str(), gs.str()});
            }
        }
    }
    return out;
}

/// classify_pair vs oracle_group_class on every dim-2 orbit representative,
/// plus the irreducibility certificate, over primes <= min(max_p, 7).
inline VerifyOutcome verify_groups(std::int64_t max_p = 7) {
    VerifyOutcome out{"groups", 0, {}};
    for (std::int64_t p : detail::primes_up_to(std::min<std::int64_t>(max_p, 7))) {
        const FieldCtx F(p, 2);
        for (Parity parity : {Parity::odd, Parity::even}) {
            for (const auto& [alpha, beta] : enumerate_dim2_orbits(F, parity)) {
                ++out.cases;
                const GroupDescriptor expected = oracle_group_class(alpha, beta, parity);
                const GroupDescriptor got = classify_pair(alpha, beta, parity);
                if (!(expected == got)) {
                    out.failures.push_back({detail::describe_pair(alpha, beta, parity),
                                            detail::describe_group(expected),
                                            detail::describe_group(got)});
                    continue;
                }
                if (!oracle_irreducible_dim2(alpha, beta, parity))
                    out.failures.push_back({detail::describe_pair(alpha, beta, parity),
                                            "irreducible 2-dimensional action", "reducible"});
            }
        }
    }
    return out;
}

/// oracle_census vs census_k2, row by row, for (e_K, f_K) in {1,2}^2 and
/// primes <= min(max_p, 7).
inline VerifyOutcome verify_census(std::int64_t max_p = 7) {
    VerifyOutcome out{"census", 0, {}};
    for (std::int64_t p : detail::primes_up_to(std::min<std::int64_t>(max_p, 7))) {
        for (std::int64_t ek : {1, 2}) {
            for (std::int64_t fk : {1, 2}) {
                ++out.cases;
                const LocalFieldParams K(p, ek, fk);
                const CensusReport expected = oracle_census(K);
                const CensusReport got = census_k2(K);
                if (!(expected == got)) {
                    std::ostringstream os;
                    os << "census p=" << p << " e_K=" << ek << " f_K=" << fk;
                    out.failures.push_back({os.str(), detail::describe_report(expected),
                                            detail::describe_report(got)});
                }
            }
        }
    }
    return out;
}

}  // namespace p2census

#endif
