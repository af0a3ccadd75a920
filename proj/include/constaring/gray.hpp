#pragma once

#include <array>

#include "rcode.hpp"

namespace constaring {

/**
 * The length-doubling Gray map Phi: R^n -> F_p^{2n},
 *
 *   a + bu + cu^2 + du^3  ->  (-d, 2a + d)
 *
 * applied blockwise: the first n output coordinates are -d_i, the last n are
 * 2a_i + d_i. Phi is F_p-linear but not injective (b and c are dropped).
 */
inline std::vector<i64> phi(const std::vector<RingElement>& v, const PrimeField& f) {
    const size_t n = v.size();
    std::vector<i64> out(2 * n);
    for (size_t i = 0; i < n; ++i) {
        out[i] = f.neg(v[i].d);
        out[n + i] = f.reduce(2 * v[i].a + v[i].d);
    }
    return out;
}

/// Gray weight of a single ring element: the Hamming weight of Phi(r).
inline int gray_weight_phi(const RingElement& r, const PrimeField& f) {
    return (f.reduce(r.d) != 0) + (f.reduce(2 * r.a + r.d) != 0);
}

inline i64 gray_weight_phi(const std::vector<RingElement>& v, const PrimeField& f) {
    i64 w = 0;
    for (const auto& r : v) w += gray_weight_phi(r, f);
    return w;
}

/// Polynomial form of Phi: -d(x) + x^n (2a(x) + d(x)), reduced mod x^{2n}-1.
/// The input must have degree below n.
inline FpPoly phi_poly(const RPoly& g, int n) {
    const PrimeField& f = g.field();
    if (g.degree() >= n) throw DegreeOverflow("phi_poly needs deg < n");
    std::vector<i64> c(2 * static_cast<size_t>(n), 0);
    for (int i = 0; i <= g.degree(); ++i) {
        const RingElement r = g[i];
        c[static_cast<size_t>(i)] = f.neg(r.d);
        c[static_cast<size_t>(n + i)] = f.reduce(2 * r.a + r.d);
    }
    return FpPoly(f, std::move(c));
}

/**
 * The F_p-span of Phi over a spanning set of C. Phi is only F_p-linear, so
 * the image is computed from the eta_i-scaled component bases rather than
 * from any single generator.
 */
inline FpLinearCode phi_image_code(const RLinearCode& c, const IdempotentSet& ids) {
    const PrimeField& f = c.field();
    std::vector<std::vector<i64>> rows;
    for (const auto& v : spanning_vectors(c, ids)) rows.push_back(phi(v, f));
    return FpLinearCode::from_generators(std::move(rows), f, 2 * c.length());
}

/**
 * The 4x4 matrix of the bijective Gray map Psi: (a, b, c, d) -> (a,b,c,d) M,
 * with rows (1,1,1,1), (0,1,xi^2,xi), (0,1,xi,xi^2), (0,1,1,1). Nonsingular:
 * det M = 3 xi (1 - xi) != 0.
 */
class PsiMatrix {
   public:
    explicit PsiMatrix(const PrimeField& f) : f_(f) {
        const i64 xi = f.xi();
        const i64 xi2 = f.mul(xi, xi);
        rows_ = {{{1, 1, 1, 1}, {0, 1, xi2, xi}, {0, 1, xi, xi2}, {0, 1, 1, 1}}};
    }

    const PrimeField& field() const noexcept { return f_; }
    const std::array<std::array<i64, 4>, 4>& rows() const noexcept { return rows_; }

    std::array<i64, 4> apply(const RingElement& r) const noexcept {
        const std::array<i64, 4> in{r.a, r.b, r.c, r.d};
        std::array<i64, 4> out{0, 0, 0, 0};
        for (int j = 0; j < 4; ++j) {
            i64 acc = 0;
            for (int i = 0; i < 4; ++i) {
                acc += in[static_cast<size_t>(i)] * rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
            out[static_cast<size_t>(j)] = f_.reduce(acc);
        }
        return out;
    }

    i64 det() const noexcept {
        const i64 xi = f_.xi();
        return f_.mul(f_.mul(3, xi), f_.sub(1, xi));
    }

   private:
    PrimeField f_;
    std::array<std::array<i64, 4>, 4> rows_;
};

/// Psi extended coordinatewise: each ring coordinate expands to a block of
/// four field coordinates.
inline std::vector<i64> psi(const std::vector<RingElement>& v, const PsiMatrix& m) {
    std::vector<i64> out(4 * v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        const auto block = m.apply(v[i]);
        for (size_t j = 0; j < 4; ++j) out[4 * i + j] = block[j];
    }
    return out;
}

inline int gray_weight_psi(const RingElement& r, const PsiMatrix& m) {
    int w = 0;
    for (i64 v : m.apply(r)) w += (v != 0);
    return w;
}

/// Image of C under Psi; Psi is bijective, so the dimension over F_p equals
/// log_p |C|.
inline FpLinearCode psi_image_code(const RLinearCode& c, const PsiMatrix& m,
                                   const IdempotentSet& ids) {
    std::vector<std::vector<i64>> rows;
    for (const auto& v : spanning_vectors(c, ids)) rows.push_back(psi(v, m));
    return FpLinearCode::from_generators(std::move(rows), c.field(), 4 * c.length());
}

}  // namespace constaring
