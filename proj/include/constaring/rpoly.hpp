#pragma once

#include <array>

#include "poly.hpp"
#include "ring.hpp"

namespace constaring {

/// Dense polynomial over R, low-degree-first, no trailing zero coefficients.
class RPoly {
   public:
    explicit RPoly(const PrimeField& f) : f_(f) {}

    RPoly(const PrimeField& f, std::vector<RingElement> coeffs) : f_(f), c_(std::move(coeffs)) {
        prune();
    }

    static RPoly from_scalar_poly(const FpPoly& a) {
        std::vector<RingElement> c(static_cast<size_t>(a.degree() + 1));
        for (int i = 0; i <= a.degree(); ++i) c[static_cast<size_t>(i)] = {a[i], 0, 0, 0};
        return RPoly(a.field(), std::move(c));
    }

    /// x^n - lambda for a ring constant lambda.
    static RPoly xn_minus(const PrimeField& f, int n, const RingElement& lambda) {
        std::vector<RingElement> c(static_cast<size_t>(n) + 1);
        c[0] = ring_neg(lambda, f);
        c.back() = ring_one();
        return RPoly(f, std::move(c));
    }

    const PrimeField& field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<RingElement>& coeffs() const noexcept { return c_; }

    RingElement coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                           : RingElement{};
    }
    RingElement operator[](int i) const noexcept { return coeff(i); }

    friend RPoly operator+(const RPoly& a, const RPoly& b) {
        std::vector<RingElement> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] = ring_add(a.coeff(int(i)), b.coeff(int(i)), a.f_);
        }
        return RPoly(a.f_, std::move(c));
    }

    friend RPoly operator-(const RPoly& a, const RPoly& b) {
        std::vector<RingElement> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] = ring_sub(a.coeff(int(i)), b.coeff(int(i)), a.f_);
        }
        return RPoly(a.f_, std::move(c));
    }

    friend RPoly operator*(const RPoly& a, const RPoly& b) {
        if (a.is_zero() || b.is_zero()) return RPoly(a.f_);
        std::vector<RingElement> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            for (size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = ring_add(c[i + j], ring_mul(a.c_[i], b.c_[j], a.f_), a.f_);
            }
        }
        return RPoly(a.f_, std::move(c));
    }

    friend bool operator==(const RPoly& a, const RPoly& b) noexcept {
        return a.f_.p() == b.f_.p() && a.c_ == b.c_;
    }

   private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    PrimeField f_;
    std::vector<RingElement> c_;
};

/// sum eta_i g_i(x): coefficient k is the CRT composition of the four scalar
/// coefficients g_i[k].
inline RPoly assemble(const std::array<FpPoly, 4>& comps, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    int deg = -1;
    for (const auto& g : comps) deg = std::max(deg, g.degree());
    std::vector<RingElement> c(static_cast<size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
        c[static_cast<size_t>(k)] =
            ids.compose({comps[0][k], comps[1][k], comps[2][k], comps[3][k]});
    }
    return RPoly(f, std::move(c));
}

/// Inverse of assemble: the four CRT component polynomials.
inline std::array<FpPoly, 4> components(const RPoly& g, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    std::array<std::vector<i64>, 4> cs;
    for (auto& v : cs) v.assign(static_cast<size_t>(g.degree() + 1), 0);
    for (int k = 0; k <= g.degree(); ++k) {
        const auto x = ids.decompose(g.coeff(k));
        for (int i = 0; i < 4; ++i) cs[static_cast<size_t>(i)][static_cast<size_t>(k)] = x[static_cast<size_t>(i)];
    }
    return {FpPoly(f, std::move(cs[0])), FpPoly(f, std::move(cs[1])), FpPoly(f, std::move(cs[2])),
            FpPoly(f, std::move(cs[3]))};
}

/// f(delta * x) for a unit delta of R: coefficient i is scaled by delta^i.
inline RPoly substitute_scale(const RPoly& a, const RingElement& delta, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    if (!ids.is_unit(delta)) throw NotAUnit("scale substitution needs a unit of R");
    std::vector<RingElement> c(a.coeffs());
    RingElement power = ring_one();
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = ring_mul(c[i], power, f);
        power = ring_mul(power, delta, f);
    }
    return RPoly(f, std::move(c));
}

}  // namespace constaring
