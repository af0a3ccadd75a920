#pragma once

#include <numeric>
#include <string>

#include "poly.hpp"

namespace constaring {

inline int multiplicative_order_mod(i64 a, i64 q) {
    a %= q;
    if (a < 0) a += q;
    if (std::gcd(a, q) != 1) throw NotCoprime("multiplicative order needs gcd(a, q) = 1");
    i64 v = a;
    int k = 1;
    while (v != 1) {
        v = v * a % q;
        ++k;
    }
    return k;
}

/**
 * The extension field F_{p^m} = F_p[x]/(modulus), with the lexicographically
 * smallest monic irreducible modulus of degree m. Elements are FpPoly values
 * of degree < m; element k (0 <= k < p^m) has coefficient vector equal to the
 * k-th tuple (c_0, ..., c_{m-1}) in lexicographic order.
 */
class ExtField {
   public:
    ExtField(const PrimeField& base, int m) : f_(base), m_(m), modulus_(find_modulus(base, m)) {}

    const PrimeField& base() const noexcept { return f_; }
    int m() const noexcept { return m_; }
    const FpPoly& modulus() const noexcept { return modulus_; }
    u64 size() const noexcept { return detail::int_pow(static_cast<u64>(f_.p()), m_); }

    FpPoly element_at(u64 k) const {
        std::vector<i64> c(static_cast<size_t>(m_), 0);
        for (int i = m_ - 1; i >= 0; --i) {
            c[static_cast<size_t>(i)] = static_cast<i64>(k % static_cast<u64>(f_.p()));
            k /= static_cast<u64>(f_.p());
        }
        return FpPoly(f_, std::move(c));
    }

    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return poly_mod(a * b, modulus_); }
    FpPoly pow(const FpPoly& a, i64 e) const { return poly_pow_mod(a, e, modulus_); }

   private:
    static FpPoly find_modulus(const PrimeField& f, int m) {
        if (m == 1) return FpPoly::x_power(f, 1);
        const u64 count = detail::int_pow(static_cast<u64>(f.p()), m);
        for (u64 k = 0; k < count; ++k) {
            FpPoly candidate = detail::monic_poly_at(f, m, k);
            if (is_irreducible(candidate)) return candidate;
        }
        throw Error("no irreducible modulus found (unreachable for prime p)");
    }

    PrimeField f_;
    int m_;
    FpPoly modulus_;
};

/**
 * The Gaussian sum theta = sum_{i=1}^{q-1} chi(i) alpha^i, where chi is the
 * Legendre symbol mod q and alpha is a primitive q-th root of unity in
 * F_{p^m}, m the multiplicative order of p mod q. Requires p to be a
 * quadratic residue mod q, which forces theta into the prime subfield.
 *
 * The root of unity is pinned deterministically: alpha = beta^((p^m-1)/q) for
 * the first beta (in lexicographic coefficient order) whose power is not 1.
 * Replacing alpha by alpha^s for a non-residue s negates theta, so only
 * theta^2 = -q (q = 3 mod 4) resp. theta^2 = q (q = 1 mod 4) is canonical;
 * callers that need the other root pass an explicit override downstream.
 */
inline i64 gaussian_sum(const PrimeField& f, i64 q) {
    if (q < 3 || !is_prime(q)) throw NonPrime("Gaussian sum needs an odd prime q");
    if (f.p() == q) throw NotResidue("p and q must be distinct");
    if (legendre(f.p(), q) != 1) {
        throw NotResidue("p = " + std::to_string(f.p()) + " is not a quadratic residue mod " +
                         std::to_string(q));
    }
    const int m = multiplicative_order_mod(f.p(), q);
    const ExtField ext(f, m);
    const i64 group_order = static_cast<i64>(ext.size()) - 1;
    const i64 cofactor = group_order / q;

    FpPoly alpha(f);
    const FpPoly one = FpPoly::constant(f, 1);
    for (u64 k = 1; k < ext.size(); ++k) {
        FpPoly gamma = ext.pow(ext.element_at(k), cofactor);
        if (!(gamma == one)) {
            alpha = gamma;  // gamma^q = beta^(p^m - 1) = 1, so the order is exactly q
            break;
        }
    }

    FpPoly theta(f);
    FpPoly alpha_power = one;
    for (i64 i = 1; i < q; ++i) {
        alpha_power = ext.mul(alpha_power, alpha);
        theta = legendre(i, q) == 1 ? theta + alpha_power : theta - alpha_power;
    }
    if (theta.degree() > 0) {
        throw Error("Gaussian sum did not land in the prime subfield (logic error)");
    }
    const i64 value = theta.coeff(0);
    const i64 expected = q % 4 == 3 ? f.reduce(-q) : f.reduce(q);
    if (f.mul(value, value) != expected) {
        throw Error("Gaussian sum square check failed (logic error)");
    }
    return value;
}

}  // namespace constaring
