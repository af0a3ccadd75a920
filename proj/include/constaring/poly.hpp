#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "field.hpp"

namespace constaring {

/**
 * Dense univariate polynomial over F_p, coefficients stored low-degree-first
 * with no trailing zeros. The zero polynomial has an empty coefficient list
 * and degree -1. Each polynomial carries its field, and mixed-field
 * arithmetic is a programming error.
 */
class FpPoly {
   public:
    explicit FpPoly(const PrimeField& f) : f_(f) {}

    FpPoly(const PrimeField& f, std::vector<i64> coeffs) : f_(f), c_(std::move(coeffs)) {
        for (i64& v : c_) v = f_.reduce(v);
        prune();
    }

    FpPoly(const PrimeField& f, std::initializer_list<i64> coeffs)
        : FpPoly(f, std::vector<i64>(coeffs)) {}

    static FpPoly constant(const PrimeField& f, i64 c) { return FpPoly(f, {c}); }

    static FpPoly x_power(const PrimeField& f, int k, i64 scale = 1) {
        std::vector<i64> c(static_cast<size_t>(k) + 1, 0);
        c.back() = scale;
        return FpPoly(f, std::move(c));
    }

    /// x^n - sign, the modulus of cyclic (sign = +1) and negacyclic (sign = -1) codes.
    static FpPoly xn_minus(const PrimeField& f, int n, int sign) {
        std::vector<i64> c(static_cast<size_t>(n) + 1, 0);
        c[0] = f.reduce(-sign);
        c.back() = 1;
        return FpPoly(f, std::move(c));
    }

    const PrimeField& field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<i64>& coeffs() const noexcept { return c_; }

    i64 coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    i64 operator[](int i) const noexcept { return coeff(i); }
    i64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    i64 eval(i64 x) const noexcept {
        i64 v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = f_.add(f_.mul(v, x), *it);
        return v;
    }

    FpPoly monic() const {
        if (is_zero() || leading() == 1) return *this;
        const i64 s = f_.inv(leading());
        std::vector<i64> c(c_);
        for (i64& v : c) v = f_.mul(v, s);
        return FpPoly(f_, std::move(c));
    }

    FpPoly operator-() const {
        std::vector<i64> c(c_);
        for (i64& v : c) v = f_.neg(v);
        return FpPoly(f_, std::move(c));
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        assert(a.f_ == b.f_);
        std::vector<i64> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(int(i)), b.coeff(int(i)));
        return FpPoly(a.f_, std::move(c));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        assert(a.f_ == b.f_);
        std::vector<i64> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(int(i)), b.coeff(int(i)));
        return FpPoly(a.f_, std::move(c));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        assert(a.f_ == b.f_);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.f_);
        std::vector<i64> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            for (size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
            }
        }
        return FpPoly(a.f_, std::move(c));
    }

    friend FpPoly operator*(const FpPoly& a, i64 s) {
        std::vector<i64> c(a.c_);
        for (i64& v : c) v = a.f_.mul(v, s);
        return FpPoly(a.f_, std::move(c));
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept {
        return a.f_.p() == b.f_.p() && a.c_ == b.c_;
    }

    /// Deterministic order: by degree, then lexicographic on coefficient vectors.
    friend bool operator<(const FpPoly& a, const FpPoly& b) noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c_ < b.c_;
    }

   private:
    void prune() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField f_;
    std::vector<i64> c_;
};

inline std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const PrimeField& f = a.field();
    assert(f == b.field());
    if (a.degree() < b.degree()) return {FpPoly(f), a};
    std::vector<i64> rem(a.coeffs());
    std::vector<i64> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    const i64 lead_inv = f.inv(b.leading());
    for (int i = a.degree(); i >= b.degree(); --i) {
        const i64 q = f.mul(rem[static_cast<size_t>(i)], lead_inv);
        if (q == 0) continue;
        quot[static_cast<size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& r = rem[static_cast<size_t>(i - b.degree() + j)];
            r = f.sub(r, f.mul(q, b.coeff(j)));
        }
    }
    return {FpPoly(f, std::move(quot)), FpPoly(f, std::move(rem))};
}

inline FpPoly poly_mod(const FpPoly& a, const FpPoly& b) { return poly_divmod(a, b).second; }

inline bool divides(const FpPoly& d, const FpPoly& a) { return poly_mod(a, d).is_zero(); }

/// Monic gcd; gcd(f, 0) = monic(f). Both arguments zero is an error.
inline FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DivisionByZero("gcd(0, 0) is undefined");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

inline FpPoly poly_gcd(const std::vector<FpPoly>& ps) {
    assert(!ps.empty());
    FpPoly g = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) g = poly_gcd(g, ps[i]);
    return g;
}

/// a * b reduced mod x^n - 1 (cyclic convolution).
inline FpPoly mulmod_cyclic(const FpPoly& a, const FpPoly& b, int n) {
    const PrimeField& f = a.field();
    std::vector<i64> c(static_cast<size_t>(n), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            const int k = (i + j) % n;
            c[static_cast<size_t>(k)] = f.add(c[static_cast<size_t>(k)], f.mul(a[i], b[j]));
        }
    }
    return FpPoly(f, std::move(c));
}

/// Reduce mod x^n - sign: x^{n+k} folds to sign * x^k.
inline FpPoly reduce_mod_xn(const FpPoly& a, int n, int sign) {
    const PrimeField& f = a.field();
    std::vector<i64> c(static_cast<size_t>(n), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        const size_t k = static_cast<size_t>(i % n);
        const bool negate = sign == -1 && (i / n) % 2 == 1;
        c[k] = negate ? f.sub(c[k], a[i]) : f.add(c[k], a[i]);
    }
    return FpPoly(f, std::move(c));
}

/// Reduce mod x^n - 1.
inline FpPoly cyclic_reduce(const FpPoly& a, int n) { return reduce_mod_xn(a, n, 1); }

/// a(x^{-1}) mod x^n - 1: coefficient i moves to position (n - i) mod n.
inline FpPoly substitute_x_inverse(const FpPoly& a, int n) {
    const PrimeField& f = a.field();
    assert(a.degree() < n);
    std::vector<i64> c(static_cast<size_t>(n), 0);
    for (int i = 0; i <= a.degree(); ++i) c[static_cast<size_t>((n - i) % n)] = a[i];
    return FpPoly(f, std::move(c));
}

/// Monic reciprocal x^{deg h} * h(1/x); the constant term of h must be nonzero.
inline FpPoly reciprocal(const FpPoly& h) {
    if (h.is_zero() || h.coeff(0) == 0) {
        throw ZeroConstantTerm("reciprocal needs a nonzero constant term");
    }
    std::vector<i64> c(h.coeffs());
    std::reverse(c.begin(), c.end());
    return FpPoly(h.field(), std::move(c)).monic();
}

/// f(delta * x): coefficient i is scaled by delta^i. delta must be a unit.
inline FpPoly substitute_scale(const FpPoly& a, i64 delta) {
    const PrimeField& f = a.field();
    if (f.reduce(delta) == 0) throw NotAUnit("scale substitution needs a nonzero scalar");
    std::vector<i64> c(a.coeffs());
    i64 power = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = f.mul(c[i], power);
        power = f.mul(power, delta);
    }
    return FpPoly(f, std::move(c));
}

inline FpPoly poly_pow_mod(const FpPoly& base, i64 exp, const FpPoly& modulus) {
    const PrimeField& f = base.field();
    FpPoly result = FpPoly::constant(f, 1);
    FpPoly b = poly_mod(base, modulus);
    while (exp > 0) {
        if (exp & 1) result = poly_mod(result * b, modulus);
        b = poly_mod(b * b, modulus);
        exp >>= 1;
    }
    return result;
}

namespace detail {

/// Enumerates monic polynomials of exact degree d in the deterministic order
/// used everywhere: lexicographic on (c_0, c_1, ..., c_{d-1}).
inline FpPoly monic_poly_at(const PrimeField& f, int d, u64 index) {
    std::vector<i64> c(static_cast<size_t>(d) + 1, 0);
    c.back() = 1;
    for (int i = d - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] = static_cast<i64>(index % static_cast<u64>(f.p()));
        index /= static_cast<u64>(f.p());
    }
    return FpPoly(f, std::move(c));
}

inline u64 int_pow(u64 base, int exp) {
    u64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Nullspace basis of the d x d system A v = 0 over F_p (columns of v).
inline std::vector<std::vector<i64>> nullspace(std::vector<std::vector<i64>> m, const PrimeField& f,
                                               int dim) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < dim && r < dim; ++col) {
        int pr = -1;
        for (int i = r; i < dim; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(r)]);
        const i64 inv = f.inv(m[static_cast<size_t>(r)][static_cast<size_t>(col)]);
        for (int j = 0; j < dim; ++j) {
            auto& v = m[static_cast<size_t>(r)][static_cast<size_t>(j)];
            v = f.mul(v, inv);
        }
        for (int i = 0; i < dim; ++i) {
            if (i == r) continue;
            const i64 s = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (s == 0) continue;
            for (int j = 0; j < dim; ++j) {
                auto& v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                v = f.sub(v, f.mul(s, m[static_cast<size_t>(r)][static_cast<size_t>(j)]));
            }
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::vector<i64>> basis;
    size_t next_pivot = 0;
    for (int col = 0; col < dim; ++col) {
        if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<i64> v(static_cast<size_t>(dim), 0);
        v[static_cast<size_t>(col)] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            v[static_cast<size_t>(pivot_col[i])] =
                f.neg(m[i][static_cast<size_t>(col)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Berlekamp factorization of a monic squarefree polynomial, with exhaustive
/// splitting over F_p. Deterministic: factors come out sorted.
inline std::vector<FpPoly> berlekamp(const FpPoly& f_in) {
    const PrimeField& f = f_in.field();
    const int d = f_in.degree();
    if (d <= 1) return {f_in};

    // Rows of the Frobenius matrix: row i = coefficients of x^{i*p} mod f_in.
    const FpPoly xp = poly_pow_mod(FpPoly::x_power(f, 1), f.p(), f_in);
    std::vector<std::vector<i64>> frob;
    FpPoly power = FpPoly::constant(f, 1);
    for (int i = 0; i < d; ++i) {
        std::vector<i64> row(static_cast<size_t>(d), 0);
        for (int j = 0; j <= power.degree(); ++j) row[static_cast<size_t>(j)] = power[j];
        frob.push_back(std::move(row));
        power = poly_mod(power * xp, f_in);
    }

    // Berlekamp subalgebra: v with v * (Q - I) = 0, i.e. (Q^T - I) v^T = 0.
    std::vector<std::vector<i64>> a(static_cast<size_t>(d), std::vector<i64>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            i64 v = frob[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (i == j) v = f.sub(v, 1);
            a[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    }
    const auto basis = detail::nullspace(std::move(a), f, d);
    const size_t factor_count = basis.size();

    std::vector<FpPoly> factors = {f_in};
    for (const auto& vec : basis) {
        if (factors.size() == factor_count) break;
        FpPoly v(f, std::vector<i64>(vec));
        if (v.degree() < 1) continue;  // the constant subalgebra element never splits
        std::vector<FpPoly> refined;
        for (const FpPoly& g : factors) {
            if (g.degree() <= 1) {
                refined.push_back(g);
                continue;
            }
            FpPoly current = g;
            for (i64 s = 0; s < f.p() && current.degree() > 0; ++s) {
                const FpPoly piece = poly_gcd(current, v - FpPoly::constant(f, s));
                if (piece.degree() > 0 && piece.degree() < current.degree()) {
                    refined.push_back(piece);
                    current = poly_divmod(current, piece).first;
                }
            }
            if (current.degree() > 0) refined.push_back(current);
        }
        factors = std::move(refined);
    }
    assert(factors.size() == factor_count);
    for (FpPoly& g : factors) g = g.monic();
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace detail

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree at most deg/2. Desk-scale only.
inline bool is_irreducible(const FpPoly& a) {
    if (a.degree() <= 0) return false;
    if (a.degree() == 1) return true;
    const PrimeField& f = a.field();
    for (int d = 1; d <= a.degree() / 2; ++d) {
        const u64 count = detail::int_pow(static_cast<u64>(f.p()), d);
        for (u64 k = 0; k < count; ++k) {
            if (divides(detail::monic_poly_at(f, d, k), a)) return false;
        }
    }
    return true;
}

/**
 * Factors x^n - 1 (sign = +1) or x^n + 1 (sign = -1) into monic irreducible
 * polynomials over F_p, sorted by degree then lexicographic coefficients.
 * Requires gcd(n, p) = 1; repeated-root lengths are rejected.
 */
inline std::vector<FpPoly> factor_xn_pm1(int n, int sign, const PrimeField& f) {
    if (n < 1) throw Error("length must be positive");
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    if (n % f.p() == 0) {
        throw RepeatedRoots("p divides n: x^n -+ 1 is not squarefree over F_p");
    }
    return detail::berlekamp(FpPoly::xn_minus(f, n, sign));
}

}  // namespace constaring
