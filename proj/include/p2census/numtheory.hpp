#ifndef P2CENSUS_NUMTHEORY_HPP
#define P2CENSUS_NUMTHEORY_HPP

// Exact elementary number theory used by the census formulas. Everything here
// is integer-exact; rationals appear only as intermediates and every value
// that must be an integer is checked before it is returned.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2census {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// 2-adic valuation of n (n > 0).
inline int v2(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("v2: argument must be positive");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

/// Divisors of n in ascending order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Distinct prime factors of n in ascending order; empty for n = 1.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("prime_factors: argument must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("pow_mod: exponent must be nonnegative");
    if (m == 1) return 0;
    std::int64_t r = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Multiplicative order of x modulo m. Requires gcd(x, m) = 1; by convention
/// the order modulo 1 is 1 for every x.
inline std::int64_t mult_order(std::int64_t x, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("mult_order: modulus must be positive");
    if (m == 1) return 1;
    std::int64_t r = x % m;
    if (r < 0) r += m;
    if (std::gcd(r, m) != 1)
        throw std::invalid_argument("mult_order: " + std::to_string(x) + " is not a unit mod " +
                                    std::to_string(m));
    std::int64_t ord = 1;
    std::int64_t cur = r;
    while (cur != 1) {
        cur = mul_mod(cur, r, m);
        ++ord;
    }
    return ord;
}

inline BigInt pow_big(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("pow_big: exponent must be nonnegative");
    BigInt b = base, r = 1;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// Narrows a Rational known to be an integer, throwing if it is not.
inline BigInt rational_to_integer(const Rational& x, const char* what) {
    if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error(std::string(what) + ": value is not an integer");
    return boost::multiprecision::numerator(x);
}

/// Number of elements of order exactly a in Z/a x Z/b:
///   psi(a, b) = a * (a,b) * prod_{l | a/(a,b)} (1 - 1/l)
///                        * prod_{l | a, l not| a/(a,b)} (1 - 1/l^2).
inline BigInt psi(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("psi: arguments must be positive");
    const std::int64_t g = std::gcd(a, b);
    const std::int64_t a_over_g = a / g;
    Rational val = Rational(a) * g;
    for (std::int64_t l : prime_factors(a)) {
        if (a_over_g % l == 0)
            val *= Rational(l - 1, l);
        else
            val *= Rational(l * l - 1, l * l);
    }
    return rational_to_integer(val, "psi");
}

/// Fraction of order-c cyclic subgroups of F_{p^2}^x whose canonical pairing
/// splits; c must divide p^2 - 1 but not p - 1. Takes the value 1, 1/2 or 1/3
/// depending on where v2(c) sits relative to v2(p - 1) and v2(p^2 - 1).
inline Rational lambda_split(std::int64_t c, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("lambda_split: p must be prime");
    if (c <= 0) throw std::invalid_argument("lambda_split: c must be positive");
    const std::int64_t n1 = p - 1;
    const std::int64_t n2 = static_cast<std::int64_t>(p) * p - 1;
    if (n2 % c != 0)
        throw std::invalid_argument("lambda_split: c must divide p^2 - 1");
    if (n1 % c == 0)
        throw std::invalid_argument("lambda_split: c must not divide p - 1");
    const int vc = v2(c);
    if (vc == 0 || vc == v2(n2)) return 1;
    if (vc > v2(n1)) return Rational(1, 2);
    return Rational(1, 3);
}

}  // namespace p2census

#endif
