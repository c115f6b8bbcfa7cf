#ifndef P2CENSUS_REP_THEORY_HPP
#define P2CENSUS_REP_THEORY_HPP

// Irreducible representations of the split metacyclic group
//
//   H = T x| U,   <u, t | u t u^-1 = t^q, t^e = 1, u^f = 1>,   q = p^{f_K},
//
// over the algebraic closure of F_p and over F_p itself. Characters are kept
// as integer exponent classes: a pair (alpha, beta) is stored as (t, a, b)
// where t = ord(alpha), a is the exponent of alpha canonicalized over its
// q-orbit, and b is the exponent of beta modulo u~ = f/s. Only orders and
// orbits matter for dimensions and multiplicities, so no field of size p^r is
// ever constructed.

#include "p2census/local_field.hpp"
#include "p2census/numtheory.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace p2census {

struct MetacyclicGroup {
    std::int64_t p;
    std::int64_t f_k;  // q = p^{f_k}
    std::int64_t e;    // order of t
    std::int64_t f;    // order of u

    MetacyclicGroup(std::int64_t p_, std::int64_t f_k_, std::int64_t e_, std::int64_t f_)
        : p(p_), f_k(f_k_), e(e_), f(f_) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (f_k < 1) throw std::invalid_argument("MetacyclicGroup: f_K must be positive");
        if (e < 1 || f < 1) throw std::invalid_argument("MetacyclicGroup: e, f must be positive");
        if (std::gcd(e, p) != 1)
            throw std::invalid_argument("MetacyclicGroup: e must be prime to p");
        // consistency of the presentation: q^f = 1 mod e
        if (pow_mod(p, f_k * f, e) % e != 1 % e)
            throw std::invalid_argument("MetacyclicGroup: e does not divide q^f - 1");
    }

    std::int64_t q() const {
        BigInt q = pow_big(p, f_k);
        if (q > (std::int64_t(1) << 62))
            throw std::invalid_argument("MetacyclicGroup: q = p^f_K too large");
        return static_cast<std::int64_t>(q);
    }

    std::int64_t order() const { return e * f; }
};

/// One q-conjugacy class of character pairs (alpha, beta) with t | e and
/// ord(beta) | f/s. Derived data:
///   r = ord_t(p), s = ord_t(q) = r/(r, f_K), u~ = f/s,
///   w = ord_{m}(p) where m is the prime-to-p part of ord(beta).
struct CharClass {
    std::int64_t t;
    std::int64_t a;  // canonical exponent: least of {a*q^i mod t}; 0 when t = 1
    std::int64_t b;  // exponent of beta mod u~
    std::int64_t r;
    std::int64_t s;
    std::int64_t w;
    std::int64_t u_tilde;

    std::int64_t beta_order() const { return u_tilde / std::gcd(b, u_tilde); }
    bool is_trivial() const { return t == 1 && b == 0; }
};

struct IrrepDescriptor {
    CharClass char_class;
    std::int64_t dim_fpbar;        // = s
    std::int64_t dim_fp;
    std::int64_t def_field_degree; // = dim_fp / dim_fpbar
    BigInt multiplicity;           // multiplicity in Y = s * [K:Q_p]
};

/// Symbolic decomposition of F^x/(F^x)^p as a Galois module: the trivial
/// one-dimensional summand, the cyclotomic summand M_omega (kept symbolic;
/// its character values are never needed), and one row per irreducible class.
struct ModuleInventory {
    MetacyclicGroup group;
    LocalFieldParams params;
    bool trivial_summand = true;
    bool cyclotomic_summand = true;
    std::vector<IrrepDescriptor> rows;
};

namespace detail {

inline std::int64_t prime_to_p_part(std::int64_t m, std::int64_t p) {
    while (m % p == 0) m /= p;
    return m;
}

inline CharClass make_char_class(const MetacyclicGroup& H, std::int64_t t, std::int64_t a,
                                 std::int64_t b) {
    CharClass c;
    c.t = t;
    c.a = a;
    c.b = b;
    c.r = mult_order(H.p, t);
    c.s = c.r / std::gcd(c.r, H.f_k);
    if (H.f % c.s != 0) throw std::logic_error("make_char_class: s does not divide f");
    c.u_tilde = H.f / c.s;
    c.w = mult_order(H.p, prime_to_p_part(c.beta_order(), H.p));
    return c;
}

}  // namespace detail

/// One canonical representative per q-conjugacy orbit, ordered by
/// (t ascending, a ascending, b ascending).
inline std::vector<CharClass> enumerate_irreducibles(const MetacyclicGroup& H) {
    std::vector<CharClass> out;
    for (std::int64_t t : divisors(H.e)) {
        const std::int64_t r = mult_order(H.p, t);
        const std::int64_t s = r / std::gcd(r, H.f_k);
        const std::int64_t u = H.f / s;
        const std::int64_t q_mod = pow_mod(H.p, H.f_k, t);
        if (t == 1) {
            for (std::int64_t b = 0; b < u; ++b)
                out.push_back(detail::make_char_class(H, 1, 0, b));
            continue;
        }
        for (std::int64_t a = 1; a < t; ++a) {
            if (std::gcd(a, t) != 1) continue;
            bool least_in_orbit = true;
            std::int64_t cur = a;
            for (std::int64_t i = 1; i < s && least_in_orbit; ++i) {
                cur = mul_mod(cur, q_mod, t);
                least_in_orbit = cur >= a;
            }
            if (!least_in_orbit) continue;
            for (std::int64_t b = 0; b < u; ++b)
                out.push_back(detail::make_char_class(H, t, a, b));
        }
    }
    return out;
}

/// Dimension over F_p: lcm(r*w/(r, f_K), r), equivalently s*lcm(w, (r, f_K)).
inline std::int64_t rep_dimension(const CharClass& c, std::int64_t f_k) {
    if (f_k < 1) throw std::invalid_argument("rep_dimension: f_K must be positive");
    const std::int64_t g = std::gcd(c.r, f_k);
    return std::lcm(c.r * c.w / g, c.r);
}

/// Degree over F_p of the field of definition.
inline std::int64_t def_field_degree(const CharClass& c, std::int64_t f_k) {
    if (f_k < 1) throw std::invalid_argument("def_field_degree: f_K must be positive");
    return std::lcm(c.w, std::gcd(c.r, f_k));
}

inline BigInt multiplicity_in_Y(const CharClass& c, const LocalFieldParams& K) {
    return BigInt(c.s) * K.n();
}

/// Number of irreducible submodules of type V inside V^m, where V has
/// endomorphism field of degree d over F_p: (p^{dm} - 1)/(p^d - 1).
inline BigInt submodule_count(std::int64_t d, std::int64_t m, std::int64_t p) {
    if (d < 1 || m < 1) throw std::invalid_argument("submodule_count: d, m must be positive");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const BigInt num = pow_big(p, d * m) - 1;
    const BigInt den = pow_big(p, d) - 1;
    if (num % den != 0) throw std::logic_error("submodule_count: division is not exact");
    return num / den;
}

inline ModuleInventory module_inventory(const MetacyclicGroup& H, const LocalFieldParams& K) {
    if (H.p != K.p || H.f_k != K.f_k)
        throw std::invalid_argument("module_inventory: group and field parameters disagree");
    ModuleInventory inv{H, K, true, true, {}};
    for (const CharClass& c : enumerate_irreducibles(H)) {
        IrrepDescriptor row;
        row.char_class = c;
        row.dim_fpbar = c.s;
        row.dim_fp = rep_dimension(c, K.f_k);
        row.def_field_degree = def_field_degree(c, K.f_k);
        row.multiplicity = multiplicity_in_Y(c, K);
        inv.rows.push_back(row);
    }
    return inv;
}

}  // namespace p2census

#endif
