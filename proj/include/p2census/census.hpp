#ifndef P2CENSUS_CENSUS_HPP
#define P2CENSUS_CENSUS_HPP

// The main deliverable: for a base field K (an extension of Q_p of degree
// n = e_K*f_K), count the isomorphism classes of degree-p^2 extensions with
// no intermediate field, grouped by the Galois group of the normal closure.
//
// Group descriptors:
//   cyclic       F_{p^2}^+ x| N_c          (order c*p^2)
//   metacyclic2  F_{p^2}^+ x| <N_c, u>     (order 2c*p^2), split or non-split
// where N_c is the order-c subgroup of F_{p^2}^x and c runs over divisors of
// p^2 - 1 not dividing p - 1.

#include "p2census/finite_field.hpp"
#include "p2census/local_field.hpp"
#include "p2census/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace p2census {

struct GroupDescriptor {
    enum class Kind { cyclic, metacyclic2 };

    Kind kind;
    std::int64_t c;
    bool split;  // meaningful for metacyclic2 only; false on cyclic rows

    static GroupDescriptor make_cyclic(std::int64_t c) {
        return GroupDescriptor{Kind::cyclic, c, false};
    }
    static GroupDescriptor make_metacyclic2(std::int64_t c, bool split) {
        return GroupDescriptor{Kind::metacyclic2, c, split};
    }

    friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
        return a.kind == b.kind && a.c == b.c && a.split == b.split;
    }
    friend bool operator!=(const GroupDescriptor& a, const GroupDescriptor& b) {
        return !(a == b);
    }
    // report order: cyclic before metacyclic2, then c ascending, split rows
    // before non-split
    friend bool operator<(const GroupDescriptor& a, const GroupDescriptor& b) {
        return std::make_tuple(static_cast<int>(a.kind), a.c, a.split ? 0 : 1) <
               std::make_tuple(static_cast<int>(b.kind), b.c, b.split ? 0 : 1);
    }
};

/// Order of the full Galois group named by the descriptor.
inline std::int64_t group_order(const GroupDescriptor& g, std::int64_t p) {
    return (g.kind == GroupDescriptor::Kind::metacyclic2 ? 2 : 1) * g.c * p * p;
}

struct CensusRow {
    GroupDescriptor group;
    BigInt count;

    friend bool operator==(const CensusRow& a, const CensusRow& b) {
        return a.group == b.group && a.count == b.count;
    }
};

struct CensusReport {
    LocalFieldParams params;
    std::vector<CensusRow> rows;
    BigInt total_classes;
    BigInt total_extensions;
    std::int64_t classes_per_extension_orbit;  // p^2

    friend bool operator==(const CensusReport& a, const CensusReport& b) {
        return a.params == b.params && a.rows == b.rows && a.total_classes == b.total_classes &&
               a.total_extensions == b.total_extensions &&
               a.classes_per_extension_orbit == b.classes_per_extension_orbit;
    }
};

/// Representatives of the Frobenius orbits of character pairs giving a
/// 2-dimensional representation. Orbits always have exactly two raw pairs;
/// the representative is the lexicographically least by (dlog a, dlog b).
///
/// Even f_K: pairs in F_{p^2}^x x F_{p^2}^x not both in F_p^x, orbit
/// (a, b) ~ (a^p, b^p). Odd f_K: pairs with a in F_p^x, b outside (orbit
/// (a, b^p)) together with pairs with a outside, b in F_p^x (orbit (a^p, b)).
inline std::vector<std::pair<FqElem, FqElem>> enumerate_dim2_orbits(const FieldCtx& F,
                                                                    Parity parity) {
    if (F.d() != 2) throw std::invalid_argument("enumerate_dim2_orbits: need a degree-2 context");
    const std::int64_t p = F.p();
    const std::int64_t N = F.unit_order();
    const std::int64_t sub = p + 1;  // dlogs of F_p^x
    std::vector<std::pair<FqElem, FqElem>> out;
    auto add_if_least = [&](std::int64_t al, std::int64_t bl, std::int64_t al2, std::int64_t bl2) {
        if (std::make_pair(al, bl) < std::make_pair(al2, bl2))
            out.emplace_back(F.from_dlog(al), F.from_dlog(bl));
    };
    if (parity == Parity::even) {
        for (std::int64_t al = 0; al < N; ++al)
            for (std::int64_t bl = 0; bl < N; ++bl) {
                if (al % sub == 0 && bl % sub == 0) continue;
                add_if_least(al, bl, al * p % N, bl * p % N);
            }
        return out;
    }
    for (std::int64_t al = 0; al < N; al += sub)
        for (std::int64_t bl = 0; bl < N; ++bl) {
            if (bl % sub == 0) continue;
            add_if_least(al, bl, al, bl * p % N);
        }
    for (std::int64_t al = 0; al < N; ++al) {
        if (al % sub == 0) continue;
        for (std::int64_t bl = 0; bl < N; bl += sub) add_if_least(al, bl, al * p % N, bl);
    }
    return out;
}

/// Galois group of the normal closure for one orbit representative.
inline GroupDescriptor classify_pair(const FqElem& alpha, const FqElem& beta, Parity parity) {
    alpha.require_same(beta);
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("classify_pair: zero element");
    if (alpha.field_degree() != 2)
        throw std::invalid_argument("classify_pair: need F_{p^2} elements");
    const bool a_in = alpha.in_prime_field();
    const bool b_in = beta.in_prime_field();
    if (parity == Parity::even) {
        if (a_in && b_in)
            throw std::invalid_argument("classify_pair: scalar pair is not 2-dimensional");
        return GroupDescriptor::make_cyclic(std::lcm(alpha.order(), beta.order()));
    }
    if (a_in && !b_in)
        return GroupDescriptor::make_cyclic(std::lcm(alpha.order(), beta.order()));
    if (!a_in && b_in) {
        const std::int64_t p = alpha.char_p();
        const std::int64_t N = alpha.field_units();
        const std::int64_t m = std::gcd(std::gcd(alpha.dlog(), beta.dlog()), N);
        const std::int64_t c = N / m;
        // beta in <gamma^{p+1}> with gamma = gamma0^m: exact dlog divisibility
        const bool split = beta.dlog() % std::gcd(m * (p + 1), N) == 0;
        return GroupDescriptor::make_metacyclic2(c, split);
    }
    throw std::invalid_argument("classify_pair: pair is not 2-dimensional for odd f_K");
}

/// Closed-form census. Every division is exact and checked; the row sum is
/// checked against the independent closed form p(p^2+p-2)(p^{2n}-1)/(2(p+1)).
inline CensusReport census_k2(const LocalFieldParams& K, bool include_zero_rows = false) {
    const std::int64_t p = K.p;
    const std::int64_t N = p * p - 1;
    const std::int64_t n = K.n();
    const BigInt p2n = pow_big(p, 2 * n);
    const bool even = K.parity() == Parity::even;
    const std::int64_t psi_mod = even ? N : p - 1;  // p^{(f_K,2)} - 1
    const Rational cyclic_factor = Rational(p2n - 1) / (2 * N);
    const Rational meta_factor = Rational(p2n - 1) / (2 * (p - 1));

    CensusReport rep{K, {}, 0, 0, p * p};
    for (std::int64_t c : divisors(N)) {
        if ((p - 1) % c == 0) continue;
        const BigInt cyc =
            rational_to_integer(cyclic_factor * Rational(psi(c, psi_mod)), "census cyclic count");
        if (cyc != 0 || include_zero_rows)
            rep.rows.push_back({GroupDescriptor::make_cyclic(c), cyc});
        if (even) continue;
        const Rational base = meta_factor * Rational(psi(c, p - 1));
        const Rational lam = lambda_split(c, p);
        const BigInt split_count = rational_to_integer(lam * base, "census split count");
        const BigInt nonsplit_count =
            rational_to_integer((1 - lam) * base, "census non-split count");
        if (split_count != 0 || include_zero_rows)
            rep.rows.push_back({GroupDescriptor::make_metacyclic2(c, true), split_count});
        if (nonsplit_count != 0 || include_zero_rows)
            rep.rows.push_back({GroupDescriptor::make_metacyclic2(c, false), nonsplit_count});
    }
    std::sort(rep.rows.begin(), rep.rows.end(),
              [](const CensusRow& a, const CensusRow& b) { return a.group < b.group; });

    BigInt total = 0;
    for (const CensusRow& row : rep.rows) total += row.count;
    const BigInt closed = rational_to_integer(
        Rational(BigInt(p) * (p * p + p - 2) * (p2n - 1)) / (2 * (p + 1)), "census closed form");
    if (total != closed)
        throw std::logic_error("census_k2: row sum disagrees with the closed form");
    rep.total_classes = total;
    rep.total_extensions = BigInt(p) * p * total;
    const BigInt closed_ext = rational_to_integer(
        Rational(BigInt(p) * p * p * (p * p + p - 2) * (p2n - 1)) / (2 * (p + 1)),
        "census extension closed form");
    if (rep.total_extensions != closed_ext)
        throw std::logic_error("census_k2: extension total disagrees with the closed form");
    return rep;
}

}  // namespace p2census

#endif
