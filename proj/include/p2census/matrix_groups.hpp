#ifndef P2CENSUS_MATRIX_GROUPS_HPP
#define P2CENSUS_MATRIX_GROUPS_HPP

// 2x2 matrix realizations over F_{p^2}:
//
//   T_alpha = (alpha, 0; 0, alpha^p)      U_beta = (0, beta; 1, 0)
//
// together with subgroup closure, brute-force abstract isomorphism testing,
// and the diagonal-conjugation canonical form of a pair (alpha, beta).
// Everything here is desk scale: the groups of interest have order at most
// 2(p^2-1).

#include "p2census/finite_field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace p2census {

class Mat2 {
public:
    Mat2(const FqElem& a00, const FqElem& a01, const FqElem& a10, const FqElem& a11)
        : m_{a00, a01, a10, a11} {
        a00.require_same(a01);
        a00.require_same(a10);
        a00.require_same(a11);
        if (a00.field_degree() != 2)
            throw std::invalid_argument("Mat2: entries must live in a degree-2 field");
    }

    const FqElem& at(int row, int col) const {
        return m_[static_cast<std::size_t>(row * 2 + col)];
    }

    static Mat2 identity(const FieldCtx& F) { return Mat2(F.one(), F.zero(), F.zero(), F.one()); }

    /// Identity matrix over the same field as m.
    static Mat2 identity_like(const Mat2& m) {
        const FqElem z = m.m_[0] - m.m_[0];
        const FqElem o = m.m_[0].pow(0);
        return Mat2(o, z, z, o);
    }

    FqElem det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    bool is_identity() const {
        return m_[0].code() == 1 && m_[1].code() == 0 && m_[2].code() == 0 && m_[3].code() == 1;
    }

    Mat2 inverse() const {
        const FqElem d = det();
        if (d.is_zero()) throw std::invalid_argument("Mat2::inverse: singular matrix");
        const FqElem di = d.inv();
        const FqElem z = m_[0] - m_[0];
        return Mat2(m_[3] * di, (z - m_[1]) * di, (z - m_[2]) * di, m_[0] * di);
    }

    std::array<std::int64_t, 4> codes() const {
        return {m_[0].code(), m_[1].code(), m_[2].code(), m_[3].code()};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        a.m_[0].require_same(b.m_[0]);
        return Mat2(a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
                    a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]);
    }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.codes() == b.codes(); }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }
    friend bool operator<(const Mat2& a, const Mat2& b) { return a.codes() < b.codes(); }

private:
    std::array<FqElem, 4> m_;
};

inline Mat2 make_T(const FqElem& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("make_T: alpha must be nonzero");
    const FqElem z = alpha - alpha;
    return Mat2(alpha, z, z, alpha.frobenius());
}

inline Mat2 make_U(const FqElem& beta) {
    if (beta.is_zero()) throw std::invalid_argument("make_U: beta must be nonzero");
    const FqElem z = beta - beta;
    return Mat2(z, beta, beta.pow(0), z);
}

/// Matrix of multiplication by alpha on F_{p^2} seen as a plane over F_p, in
/// the basis {1, x} with x^2 = x + k. Entries lie in the prime field.
inline Mat2 multiplication_matrix(const FqElem& alpha) {
    if (alpha.is_zero())
        throw std::invalid_argument("multiplication_matrix: alpha must be nonzero");
    if (alpha.field_degree() != 2)
        throw std::invalid_argument("multiplication_matrix: need an F_{p^2} element");
    const std::int64_t a0 = alpha.coeff0(), a1 = alpha.coeff1(), k = alpha.field_modulus_k();
    return Mat2(alpha.with_coeffs(a0, 0), alpha.with_coeffs(a1 * k, 0), alpha.with_coeffs(a1, 0),
                alpha.with_coeffs(a0 + a1, 0));
}

class MatrixGroup {
public:
    const std::vector<Mat2>& elements() const { return elems_; }
    const std::vector<Mat2>& generators() const { return gens_; }
    std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }

    bool contains(const Mat2& m) const {
        return std::binary_search(elems_.begin(), elems_.end(), m);
    }

    std::int64_t index_of(const Mat2& m) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
        if (it == elems_.end() || *it != m)
            throw std::invalid_argument("MatrixGroup::index_of: not an element");
        return it - elems_.begin();
    }

    static std::int64_t element_order(const Mat2& m) {
        if (m.det().is_zero()) throw std::invalid_argument("element_order: singular matrix");
        std::int64_t ord = 1;
        Mat2 cur = m;
        while (!cur.is_identity()) {
            cur = cur * m;
            ++ord;
        }
        return ord;
    }

    /// Order multiset as {element order -> count}.
    std::map<std::int64_t, std::int64_t> order_statistics() const {
        std::map<std::int64_t, std::int64_t> stats;
        for (std::int64_t o : element_orders()) ++stats[o];
        return stats;
    }

    /// Orders aligned with elements(), computed once.
    const std::vector<std::int64_t>& element_orders() const {
        if (orders_.empty() && !elems_.empty()) {
            orders_.reserve(elems_.size());
            for (const Mat2& m : elems_) orders_.push_back(element_order(m));
        }
        return orders_;
    }

private:
    friend MatrixGroup closure(const std::vector<Mat2>&, std::int64_t);
    std::vector<Mat2> gens_;
    std::vector<Mat2> elems_;
    mutable std::vector<std::int64_t> orders_;
};

/// Breadth-first closure of the generated subgroup. The cap (default
/// 8(p^2-1)^2) guards against runaway input in verify mode; exceeding it
/// means the generators do not describe a group this library works with.
inline MatrixGroup closure(const std::vector<Mat2>& generators, std::int64_t cap = 0) {
    if (generators.empty()) throw std::invalid_argument("closure: no generators");
    for (const Mat2& g : generators)
        if (g.det().is_zero()) throw std::invalid_argument("closure: singular generator");
    if (cap <= 0) {
        const std::int64_t units = generators.front().at(0, 0).field_units();
        cap = 8 * units * units;
    }
    std::set<std::array<std::int64_t, 4>> seen;
    std::queue<Mat2> work;
    std::vector<Mat2> all;
    auto push = [&](const Mat2& m) {
        if (!seen.insert(m.codes()).second) return;
        if (static_cast<std::int64_t>(seen.size()) > cap)
            throw std::runtime_error("closure: cap exceeded, generators invalid for this context");
        all.push_back(m);
        work.push(m);
    };
    push(Mat2::identity_like(generators.front()));
    while (!work.empty()) {
        const Mat2 cur = work.front();
        work.pop();
        for (const Mat2& g : generators) push(cur * g);
    }
    std::sort(all.begin(), all.end());
    MatrixGroup G;
    G.gens_ = generators;
    G.elems_ = std::move(all);
    return G;
}

namespace detail {

/// Number of elements of G reachable from the identity under right
/// multiplication by the given elements (= size of the generated subgroup).
inline std::int64_t span_size(const MatrixGroup& G, const std::vector<const Mat2*>& gens) {
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    std::queue<std::int64_t> bfs;
    const std::int64_t id = G.index_of(Mat2::identity_like(G.elements().front()));
    in[static_cast<std::size_t>(id)] = 1;
    bfs.push(id);
    std::int64_t count = 1;
    while (!bfs.empty()) {
        const std::int64_t ix = bfs.front();
        bfs.pop();
        for (const Mat2* g : gens) {
            const std::int64_t iy = G.index_of(G.elements()[static_cast<std::size_t>(ix)] * *g);
            if (in[static_cast<std::size_t>(iy)]) continue;
            in[static_cast<std::size_t>(iy)] = 1;
            bfs.push(iy);
            ++count;
        }
    }
    return count;
}

/// Checks whether gens1[i] -> gens2[i] extends to an isomorphism G1 -> G2 by
/// walking the right Cayley graph of G1 and verifying that every edge maps
/// consistently; gens1 must generate G1 and |G1| = |G2|.
inline bool extends_to_isomorphism(const MatrixGroup& G1, const MatrixGroup& G2,
                                   const std::vector<const Mat2*>& gens1,
                                   const std::vector<const Mat2*>& gens2) {
    const std::int64_t n = G1.order();
    std::vector<std::int64_t> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    const std::int64_t i1 = G1.index_of(Mat2::identity_like(G1.elements().front()));
    const std::int64_t i2 = G2.index_of(Mat2::identity_like(G2.elements().front()));
    image[static_cast<std::size_t>(i1)] = i2;
    used[static_cast<std::size_t>(i2)] = 1;
    std::queue<std::int64_t> bfs;
    bfs.push(i1);
    std::int64_t visited = 1;
    while (!bfs.empty()) {
        const std::int64_t ix = bfs.front();
        bfs.pop();
        for (std::size_t k = 0; k < gens1.size(); ++k) {
            const std::int64_t iy =
                G1.index_of(G1.elements()[static_cast<std::size_t>(ix)] * *gens1[k]);
            const std::int64_t iz = G2.index_of(
                G2.elements()[static_cast<std::size_t>(image[static_cast<std::size_t>(ix)])] *
                *gens2[k]);
            std::int64_t& slot = image[static_cast<std::size_t>(iy)];
            if (slot == -1) {
                if (used[static_cast<std::size_t>(iz)]) return false;
                slot = iz;
                used[static_cast<std::size_t>(iz)] = 1;
                bfs.push(iy);
                ++visited;
            } else if (slot != iz) {
                return false;
            }
        }
    }
    return visited == n;
}

}  // namespace detail

/// Abstract isomorphism by brute force: order check, element-order-multiset
/// check, then a search over generator images validated edge-by-edge on the
/// Cayley graph. The groups handled here are generated by at most two
/// elements.
inline bool is_isomorphic(const MatrixGroup& G1, const MatrixGroup& G2) {
    if (G1.order() != G2.order()) return false;
    const std::int64_t n = G1.order();
    if (n == 1) return true;
    const std::vector<std::int64_t>& ord1 = G1.element_orders();
    const std::vector<std::int64_t>& ord2 = G2.element_orders();
    if (G1.order_statistics() != G2.order_statistics()) return false;

    const std::int64_t max_ord = *std::max_element(ord1.begin(), ord1.end());
    const std::int64_t ig1 =
        std::find(ord1.begin(), ord1.end(), max_ord) - ord1.begin();
    const Mat2* g1 = &G1.elements()[static_cast<std::size_t>(ig1)];

    if (max_ord == n) {
        // cyclic: search images of the single generator
        for (std::size_t j = 0; j < ord2.size(); ++j) {
            if (ord2[j] != max_ord) continue;
            if (detail::extends_to_isomorphism(G1, G2, {g1}, {&G2.elements()[j]})) return true;
        }
        return false;
    }

    // find a second generator completing g1, deterministically
    const Mat2* g2 = nullptr;
    for (const Mat2& cand : G1.elements()) {
        if (detail::span_size(G1, {g1, &cand}) == n) {
            g2 = &cand;
            break;
        }
    }
    if (g2 == nullptr) {
        // none of these groups needs three generators; a full pair scan is the
        // last honest resort before giving up
        for (const Mat2& c1 : G1.elements()) {
            for (const Mat2& c2 : G1.elements()) {
                if (detail::span_size(G1, {&c1, &c2}) == n) {
                    g1 = &c1;
                    g2 = &c2;
                    break;
                }
            }
            if (g2 != nullptr) break;
        }
    }
    if (g2 == nullptr)
        throw std::invalid_argument("is_isomorphic: groups are not generated by two elements");

    const std::int64_t o1 = MatrixGroup::element_order(*g1);
    const std::int64_t o2 = MatrixGroup::element_order(*g2);
    for (std::size_t j1 = 0; j1 < ord2.size(); ++j1) {
        if (ord2[j1] != o1) continue;
        for (std::size_t j2 = 0; j2 < ord2.size(); ++j2) {
            if (ord2[j2] != o2) continue;
            if (detail::extends_to_isomorphism(G1, G2, {g1, g2},
                                               {&G2.elements()[j1], &G2.elements()[j2]}))
                return true;
        }
    }
    return false;
}

/// Complete isomorphism invariant of the pair (alpha, beta) in the
/// non-abelian case: c = |<alpha, beta>| and the diagonal-conjugation class
/// j = dlog(beta)/(p+1) reduced modulo (m, p-1), where m = (p^2-1)/c.
struct CanonicalForm {
    std::int64_t c;
    std::int64_t j_class;
    std::int64_t j_modulus;  // gcd(m, p-1)

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.c == b.c && a.j_class == b.j_class && a.j_modulus == b.j_modulus;
    }
    friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return std::array<std::int64_t, 3>{a.c, a.j_class, a.j_modulus} <
               std::array<std::int64_t, 3>{b.c, b.j_class, b.j_modulus};
    }
};

inline CanonicalForm canonicalize(const FqElem& alpha, const FqElem& beta) {
    alpha.require_same(beta);
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("canonicalize: zero element");
    if (alpha.field_degree() != 2)
        throw std::invalid_argument("canonicalize: need F_{p^2} elements");
    if (alpha.in_prime_field())
        throw std::invalid_argument("canonicalize: alpha must lie outside F_p");
    if (!beta.in_prime_field())
        throw std::invalid_argument("canonicalize: beta must lie in F_p^x");
    const std::int64_t p = alpha.char_p();
    const std::int64_t N = alpha.field_units();
    const std::int64_t m = std::gcd(std::gcd(alpha.dlog(), beta.dlog()), N);
    const std::int64_t c = N / m;
    const std::int64_t j = beta.dlog() / (p + 1);
    const std::int64_t mod = std::gcd(m, p - 1);
    return CanonicalForm{c, j % mod, mod};
}

}  // namespace p2census

#endif
