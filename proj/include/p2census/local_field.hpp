#ifndef P2CENSUS_LOCAL_FIELD_HPP
#define P2CENSUS_LOCAL_FIELD_HPP

#include "p2census/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace p2census {

/// Parity of the residue degree f_K; the census depends on p, n = e_K*f_K and
/// this parity only.
enum class Parity { odd, even };

inline Parity parity_of(std::int64_t f_k) { return f_k % 2 == 0 ? Parity::even : Parity::odd; }

/// Description of the base field K: an extension of Q_p with ramification
/// index e_K and residue degree f_K, so [K:Q_p] = n = e_K*f_K.
struct LocalFieldParams {
    std::int64_t p;
    std::int64_t e_k;
    std::int64_t f_k;

    LocalFieldParams(std::int64_t p_, std::int64_t e_k_, std::int64_t f_k_)
        : p(p_), e_k(e_k_), f_k(f_k_) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (e_k < 1) throw std::invalid_argument("e_K must be positive");
        if (f_k < 1) throw std::invalid_argument("f_K must be positive");
    }

    std::int64_t n() const { return e_k * f_k; }
    Parity parity() const { return parity_of(f_k); }

    friend bool operator==(const LocalFieldParams& a, const LocalFieldParams& b) {
        return a.p == b.p && a.e_k == b.e_k && a.f_k == b.f_k;
    }
};

}  // namespace p2census

#endif
