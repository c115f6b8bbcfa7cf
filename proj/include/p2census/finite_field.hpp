#ifndef P2CENSUS_FINITE_FIELD_HPP
#define P2CENSUS_FINITE_FIELD_HPP

// F_{p^d} for d in {1, 2}, with full discrete-log tables built at
// construction. Elements are value types carrying a pointer to their field's
// tables; keep at least one FieldCtx handle alive while elements are in use.
//
// The construction is deterministic so that two contexts with the same (p, d)
// are interchangeable:
//   * d = 2 modulus is x^2 = x + k for the least k >= 1 making it irreducible
//     (for p = 2 this is x^2 + x + 1),
//   * the generator is the first element in code order (code = c0 + p*c1)
//     whose order is p^d - 1.

#include "p2census/numtheory.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2census {

namespace detail {

struct FieldData {
    std::int64_t p = 0;
    int d = 0;
    std::int64_t size = 0;        // p^d
    std::int64_t units = 0;       // p^d - 1
    std::int64_t modulus_k = 0;   // x^2 = x + k when d = 2
    std::int64_t gen_code = 0;
    std::vector<std::int64_t> exp_table;  // dlog -> code
    std::vector<std::int64_t> log_table;  // code -> dlog, -1 for zero

    std::int64_t mul_codes(std::int64_t a, std::int64_t b) const {
        const std::int64_t a0 = a % p, a1 = a / p;
        const std::int64_t b0 = b % p, b1 = b / p;
        const std::int64_t cross = a1 * b1 % p;
        const std::int64_t c0 = (a0 * b0 + modulus_k * cross) % p;
        const std::int64_t c1 = (a0 * b1 + a1 * b0 + cross) % p;
        return c0 + p * c1;
    }
};

}  // namespace detail

class FqElem {
public:
    FqElem() = default;

    std::int64_t code() const { return code_; }
    std::int64_t coeff0() const { return code_ % tab_->p; }
    std::int64_t coeff1() const { return code_ / tab_->p; }
    bool is_zero() const { return code_ == 0; }
    bool in_prime_field() const { return code_ < tab_->p; }

    std::int64_t char_p() const { return tab_->p; }
    int field_degree() const { return tab_->d; }
    std::int64_t field_units() const { return tab_->units; }
    std::int64_t field_modulus_k() const { return tab_->modulus_k; }

    /// Generator of the unit group of this element's field.
    FqElem field_generator() const {
        if (tab_ == nullptr) throw std::invalid_argument("field_generator: null element");
        return FqElem(tab_, tab_->gen_code);
    }

    /// c0 + c1*x in this element's field, coefficients reduced mod p.
    FqElem with_coeffs(std::int64_t c0, std::int64_t c1) const {
        if (tab_ == nullptr) throw std::invalid_argument("with_coeffs: null element");
        const std::int64_t p = tab_->p;
        c0 %= p;
        if (c0 < 0) c0 += p;
        c1 %= p;
        if (c1 < 0) c1 += p;
        if (c1 != 0 && tab_->d == 1)
            throw std::invalid_argument("with_coeffs: degree-1 field has no x term");
        return FqElem(tab_, c0 + p * c1);
    }

    /// Throws unless both elements belong to the same field.
    void require_same(const FqElem& other) const {
        if (tab_ == nullptr || other.tab_ == nullptr)
            throw std::invalid_argument("FqElem: null element in arithmetic");
        if (tab_ != other.tab_ && (tab_->p != other.tab_->p || tab_->d != other.tab_->d))
            throw std::invalid_argument("FqElem: mixed field contexts");
    }

    /// Discrete log with respect to the context generator; rejects zero.
    std::int64_t dlog() const {
        require_unit("dlog");
        return tab_->log_table[static_cast<std::size_t>(code_)];
    }

    std::int64_t order() const {
        require_unit("order");
        return tab_->units / std::gcd(dlog(), tab_->units);
    }

    FqElem inv() const {
        require_unit("inv");
        const std::int64_t n = tab_->units;
        return FqElem(tab_, tab_->exp_table[static_cast<std::size_t>((n - dlog()) % n)]);
    }

    FqElem pow(std::int64_t e) const {
        if (is_zero()) {
            if (e > 0) return *this;
            if (e == 0) return FqElem(tab_, 1);
            throw std::invalid_argument("FqElem::pow: zero to a negative power");
        }
        const std::int64_t n = tab_->units;
        std::int64_t er = e % n;
        if (er < 0) er += n;
        return FqElem(tab_, tab_->exp_table[static_cast<std::size_t>(mul_mod(dlog(), er, n))]);
    }

    FqElem frobenius() const { return pow(tab_->p); }

    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        if (a.is_zero() || b.is_zero()) return FqElem(a.tab_, 0);
        const std::int64_t n = a.tab_->units;
        return FqElem(a.tab_,
                      a.tab_->exp_table[static_cast<std::size_t>((a.dlog() + b.dlog()) % n)]);
    }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        const std::int64_t p = a.tab_->p;
        const std::int64_t c0 = (a.coeff0() + b.coeff0()) % p;
        const std::int64_t c1 = (a.coeff1() + b.coeff1()) % p;
        return FqElem(a.tab_, c0 + p * c1);
    }

    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        const std::int64_t p = a.tab_->p;
        const std::int64_t c0 = (a.coeff0() - b.coeff0() + p) % p;
        const std::int64_t c1 = (a.coeff1() - b.coeff1() + p) % p;
        return FqElem(a.tab_, c0 + p * c1);
    }

    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        a.require_same(b);
        return a.code_ == b.code_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

private:
    friend class FieldCtx;

    FqElem(const detail::FieldData* tab, std::int64_t code) : tab_(tab), code_(code) {}

    void require_unit(const char* op) const {
        if (tab_ == nullptr) throw std::invalid_argument(std::string(op) + ": null element");
        if (code_ == 0) throw std::invalid_argument(std::string(op) + ": zero element");
    }

    const detail::FieldData* tab_ = nullptr;
    std::int64_t code_ = 0;
};

class FieldCtx {
public:
    FieldCtx(std::int64_t p, int d) : impl_(build(p, d)) {}

    std::int64_t p() const { return impl_->p; }
    int d() const { return impl_->d; }
    std::int64_t size() const { return impl_->size; }
    std::int64_t unit_order() const { return impl_->units; }
    /// k of the d = 2 modulus x^2 = x + k; 0 in the prime-field case.
    std::int64_t modulus_k() const { return impl_->modulus_k; }

    FqElem zero() const { return FqElem(impl_.get(), 0); }
    FqElem one() const { return FqElem(impl_.get(), 1); }
    FqElem generator() const { return FqElem(impl_.get(), impl_->gen_code); }

    /// Element with the given code in [0, p^d).
    FqElem element(std::int64_t code) const {
        if (code < 0 || code >= impl_->size)
            throw std::invalid_argument("FieldCtx::element: code out of range");
        return FqElem(impl_.get(), code);
    }

    /// c0 + c1*x with coefficients reduced mod p.
    FqElem from_coeffs(std::int64_t c0, std::int64_t c1) const {
        const std::int64_t p = impl_->p;
        c0 %= p;
        if (c0 < 0) c0 += p;
        c1 %= p;
        if (c1 < 0) c1 += p;
        if (c1 != 0 && impl_->d == 1)
            throw std::invalid_argument("FieldCtx::from_coeffs: degree-1 field has no x term");
        return FqElem(impl_.get(), c0 + p * c1);
    }

    FqElem from_int(std::int64_t v) const { return from_coeffs(v, 0); }

    /// generator()^e.
    FqElem from_dlog(std::int64_t e) const { return generator().pow(e); }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p() == b.p() && a.d() == b.d();
    }

private:
    static std::shared_ptr<const detail::FieldData> build(std::int64_t p, int d) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (d != 1 && d != 2) throw std::invalid_argument("FieldCtx: d must be 1 or 2");
        auto data = std::make_shared<detail::FieldData>();
        data->p = p;
        data->d = d;
        data->size = d == 1 ? p : p * p;
        if (data->size > (std::int64_t(1) << 22))
            throw std::invalid_argument("FieldCtx: field too large for table construction");
        data->units = data->size - 1;
        if (d == 2) {
            for (std::int64_t k = 1; k < p; ++k) {
                bool has_root = false;
                for (std::int64_t x = 0; x < p && !has_root; ++x)
                    has_root = ((x * x - x - k) % p + p) % p == 0;
                if (!has_root) {
                    data->modulus_k = k;
                    break;
                }
            }
            if (data->modulus_k == 0)
                throw std::logic_error("FieldCtx: no irreducible modulus found");
        }
        for (std::int64_t code = 1; code < data->size; ++code) {
            std::int64_t cur = code, ord = 1;
            while (cur != 1) {
                cur = data->mul_codes(cur, code);
                ++ord;
            }
            if (ord == data->units) {
                data->gen_code = code;
                break;
            }
        }
        if (data->gen_code == 0) throw std::logic_error("FieldCtx: no generator found");
        data->exp_table.resize(static_cast<std::size_t>(data->units));
        data->log_table.assign(static_cast<std::size_t>(data->size), -1);
        std::int64_t cur = 1;
        for (std::int64_t i = 0; i < data->units; ++i) {
            data->exp_table[static_cast<std::size_t>(i)] = cur;
            data->log_table[static_cast<std::size_t>(cur)] = i;
            cur = data->mul_codes(cur, data->gen_code);
        }
        if (cur != 1) throw std::logic_error("FieldCtx: generator order mismatch");
        return data;
    }

    std::shared_ptr<const detail::FieldData> impl_;
};

inline FieldCtx make_field(std::int64_t p, int d) { return FieldCtx(p, d); }

inline FqElem frobenius(const FqElem& x) { return x.frobenius(); }
inline std::int64_t element_order(const FqElem& x) { return x.order(); }
inline std::int64_t dlog(const FqElem& x) { return x.dlog(); }

}  // namespace p2census

#endif
