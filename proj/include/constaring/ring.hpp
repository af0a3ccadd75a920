#pragma once

#include <array>
#include <compare>
#include <cstdio>
#include <string>

#include "field.hpp"

namespace constaring {

/// An element a + b*u + c*u^2 + d*u^3 of R = F_p[u]/(u^4 - u), all
/// coefficients canonical in [0, p). Plain value type; arithmetic takes the
/// field explicitly so bulk vectors stay compact.
struct RingElement {
    i64 a{0}, b{0}, c{0}, d{0};

    auto operator<=>(const RingElement&) const = default;
    bool is_zero() const noexcept { return a == 0 && b == 0 && c == 0 && d == 0; }
};

inline RingElement ring_from_scalar(i64 s, const PrimeField& f) { return {f.reduce(s), 0, 0, 0}; }
inline RingElement ring_one() { return {1, 0, 0, 0}; }

/// The unit 1 - 2u^3; it is its own inverse.
inline RingElement ring_lambda(const PrimeField& f) { return {1, 0, 0, f.reduce(-2)}; }

inline RingElement ring_add(const RingElement& x, const RingElement& y, const PrimeField& f) {
    return {f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d)};
}

inline RingElement ring_sub(const RingElement& x, const RingElement& y, const PrimeField& f) {
    return {f.sub(x.a, y.a), f.sub(x.b, y.b), f.sub(x.c, y.c), f.sub(x.d, y.d)};
}

inline RingElement ring_neg(const RingElement& x, const PrimeField& f) {
    return {f.neg(x.a), f.neg(x.b), f.neg(x.c), f.neg(x.d)};
}

inline RingElement ring_scale(const RingElement& x, i64 s, const PrimeField& f) {
    return {f.mul(x.a, s), f.mul(x.b, s), f.mul(x.c, s), f.mul(x.d, s)};
}

/// Product in R, reducing powers via u^4 = u (so u^5 = u^2, u^6 = u^3).
inline RingElement ring_mul(const RingElement& x, const RingElement& y, const PrimeField& f) {
    const i64 a = f.mul(x.a, y.a);
    const i64 b =
        f.reduce(x.a * y.b + x.b * y.a + x.b * y.d + x.d * y.b + x.c * y.c);
    const i64 c =
        f.reduce(x.a * y.c + x.c * y.a + x.b * y.b + x.c * y.d + x.d * y.c);
    const i64 d =
        f.reduce(x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b + x.d * y.d);
    return {a, b, c, d};
}

/// Evaluation of a + bt + ct^2 + dt^3 at t in F_p (the CRT component maps).
inline i64 ring_eval(const RingElement& x, i64 t, const PrimeField& f) {
    const i64 t2 = f.mul(t, t);
    return f.reduce(x.a + x.b * t + x.c * t2 + x.d * f.mul(t2, t));
}

/// Textual form "a+b*u+c*u^2+d*u^3" with all four coefficients explicit.
inline std::string to_string(const RingElement& r) {
    return std::to_string(r.a) + "+" + std::to_string(r.b) + "*u+" + std::to_string(r.c) +
           "*u^2+" + std::to_string(r.d) + "*u^3";
}

inline RingElement parse_ring_element(const std::string& s, const PrimeField& f) {
    long long a = 0, b = 0, c = 0, d = 0;
    char tail = '\0';
    const int matched =
        std::sscanf(s.c_str(), "%lld+%lld*u+%lld*u^2+%lld*u^3%c", &a, &b, &c, &d, &tail);
    if (matched != 4) throw Error("malformed ring element '" + s + "'");
    return {f.reduce(a), f.reduce(b), f.reduce(c), f.reduce(d)};
}

/**
 * The four primitive idempotents of R for a field with p = 1 (mod 3):
 *
 *   eta1 = 1 - u^3
 *   eta2 = 3^{-1} (u + u^2 + u^3)
 *   eta3 = 3^{-1} (xi u + xi^2 u^2 + u^3)
 *   eta4 = 3^{-1} (xi^2 u + xi u^2 + u^3)
 *
 * They are orthogonal, sum to 1, and split R as eta1 R + ... + eta4 R, i.e.
 * R is isomorphic to F_p^4. The isomorphism is evaluation of u at the points
 * (0, 1, xi^2, xi) in that order, matching eta1..eta4.
 */
class IdempotentSet {
   public:
    explicit IdempotentSet(const PrimeField& f) : f_(f) {
        const i64 xi = f.xi();  // throws NoCubeRoot unless p = 1 (mod 3)
        const i64 xi2 = f.mul(xi, xi);
        const i64 third = f.inv(3);
        etas_[0] = {1, 0, 0, f.neg(1)};
        etas_[1] = {0, third, third, third};
        etas_[2] = {0, f.mul(third, xi), f.mul(third, xi2), third};
        etas_[3] = {0, f.mul(third, xi2), f.mul(third, xi), third};
        points_ = {0, 1, xi2, xi};
        for (size_t i = 0; i < 4; ++i) {
            points_sq_[i] = f.mul(points_[i], points_[i]);
            points_cu_[i] = f.mul(points_sq_[i], points_[i]);
        }
    }

    const PrimeField& field() const noexcept { return f_; }

    /// eta_i for i in 1..4.
    const RingElement& eta(int i) const {
        if (i < 1 || i > 4) throw Error("idempotent index must be in 1..4");
        return etas_[static_cast<size_t>(i - 1)];
    }

    /// CRT coordinates (x1, x2, x3, x4) with r = sum eta_i x_i.
    std::array<i64, 4> decompose(const RingElement& r) const {
        std::array<i64, 4> out;
        for (size_t i = 0; i < 4; ++i) {
            out[i] = f_.reduce(r.a + r.b * points_[i] + r.c * points_sq_[i] + r.d * points_cu_[i]);
        }
        return out;
    }

    RingElement compose(const std::array<i64, 4>& x) const {
        RingElement r;
        for (int i = 0; i < 4; ++i) {
            r = ring_add(r, ring_scale(etas_[static_cast<size_t>(i)], x[static_cast<size_t>(i)], f_), f_);
        }
        return r;
    }

    /// Units are exactly the elements with all four CRT coordinates nonzero.
    bool is_unit(const RingElement& r) const {
        const auto x = decompose(r);
        return x[0] != 0 && x[1] != 0 && x[2] != 0 && x[3] != 0;
    }

    RingElement inverse(const RingElement& r) const {
        auto x = decompose(r);
        for (i64& v : x) {
            if (v == 0) throw NotAUnit("ring element " + to_string(r) + " is not a unit");
            v = f_.inv(v);
        }
        return compose(x);
    }

   private:
    PrimeField f_;
    std::array<RingElement, 4> etas_;
    std::array<i64, 4> points_;
    std::array<i64, 4> points_sq_;
    std::array<i64, 4> points_cu_;
};

}  // namespace constaring
