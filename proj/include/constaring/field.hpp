#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace constaring {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Trial-division primality test; adequate for desk-scale moduli.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

inline i64 pow_mod(i64 base, i64 exp, i64 mod) {
    i64 r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/**
 * The prime field F_p, p an odd prime, with a fixed primitive element.
 *
 * Elements are canonical integers in [0, p). The primitive element is the
 * smallest positive integer of full multiplicative order, found by exhaustive
 * order check, so that every run (and every language binding) agrees on it.
 * When p = 1 (mod 3) the cube root of unity xi = alpha^((p-1)/3) is cached;
 * it satisfies xi^2 + xi + 1 = 0.
 */
class PrimeField {
   public:
    explicit PrimeField(i64 p) : p_(p) {
        if (p < 3 || !is_prime(p)) {
            throw NonPrime("modulus must be an odd prime >= 3, got " + std::to_string(p));
        }
        alpha_ = smallest_primitive_element(p);
        if ((p - 1) % 3 == 0) xi_ = pow_mod(alpha_, (p - 1) / 3, p);
    }

    i64 p() const noexcept { return p_; }
    i64 alpha() const noexcept { return alpha_; }
    bool has_cube_root_of_unity() const noexcept { return xi_.has_value(); }

    i64 xi() const {
        if (!xi_) throw NoCubeRoot("p = " + std::to_string(p_) + " is not 1 mod 3");
        return *xi_;
    }

    i64 reduce(i64 v) const noexcept {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }
    i64 add(i64 a, i64 b) const noexcept { return reduce(a + b); }
    i64 sub(i64 a, i64 b) const noexcept { return reduce(a - b); }
    i64 mul(i64 a, i64 b) const noexcept { return reduce(reduce(a) * reduce(b)); }
    i64 neg(i64 a) const noexcept { return reduce(-a); }
    i64 pow(i64 a, i64 e) const noexcept { return pow_mod(a, e, p_); }

    i64 inv(i64 a) const {
        a = reduce(a);
        if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
        return pow_mod(a, p_ - 2, p_);
    }

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const noexcept { return p_ != other.p_; }

   private:
    static i64 smallest_primitive_element(i64 p) {
        const auto divisors = prime_divisors(p - 1);
        for (i64 g = 2; g < p; ++g) {
            bool primitive = true;
            for (i64 d : divisors) {
                if (pow_mod(g, (p - 1) / d, p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g;
        }
        return 1;  // p = 2 only, excluded by the constructor
    }

    i64 p_;
    i64 alpha_;
    std::optional<i64> xi_;
};

/// Legendre symbol (i/q) in {-1, 0, +1} via Euler's criterion.
inline int legendre(i64 i, i64 q) {
    if (q < 3 || !is_prime(q)) throw NonPrime("Legendre symbol needs an odd prime modulus");
    i %= q;
    if (i < 0) i += q;
    if (i == 0) return 0;
    const i64 e = pow_mod(i, (q - 1) / 2, q);
    return e == 1 ? 1 : -1;
}

struct ResidueSets {
    std::vector<i64> residues;      // Q_q, sorted
    std::vector<i64> non_residues;  // N_q, sorted
};

/// Splits {1, ..., q-1} into quadratic residues and non-residues mod q.
inline ResidueSets quadratic_residues(i64 q) {
    if (q < 3 || !is_prime(q)) throw NonPrime("residue sets need an odd prime modulus");
    ResidueSets out;
    for (i64 i = 1; i < q; ++i) {
        (legendre(i, q) == 1 ? out.residues : out.non_residues).push_back(i);
    }
    return out;
}

/**
 * Both square roots of a mod p as (r, p-r) with r <= p-r, or nullopt when a
 * is a non-residue. Exhaustive search below 10^4, Tonelli-Shanks above.
 */
inline std::optional<std::pair<i64, i64>> sqrt_mod(i64 a, const PrimeField& f) {
    const i64 p = f.p();
    a = f.reduce(a);
    if (a == 0) return std::make_pair<i64, i64>(0, 0);
    if (legendre(a, p) != 1) return std::nullopt;

    i64 r = 0;
    if (p < 10000) {
        for (i64 x = 1; x < p; ++x) {
            if (f.mul(x, x) == a) {
                r = x;
                break;
            }
        }
    } else if (p % 4 == 3) {
        r = f.pow(a, (p + 1) / 4);
    } else {
        // Tonelli-Shanks with the field's primitive element as non-residue source
        i64 s = p - 1;
        int e = 0;
        while (s % 2 == 0) {
            s /= 2;
            ++e;
        }
        i64 z = f.pow(f.alpha(), s);  // order 2^e
        i64 x = f.pow(a, (s + 1) / 2);
        i64 b = f.pow(a, s);
        while (b != 1) {
            int m = 0;
            i64 t = b;
            while (t != 1) {
                t = f.mul(t, t);
                ++m;
            }
            const i64 g = f.pow(z, i64(1) << (e - m - 1));
            x = f.mul(x, g);
            z = f.mul(g, g);
            b = f.mul(b, z);
            e = m;
        }
        r = x;
    }
    const i64 other = f.reduce(-r);
    return r <= other ? std::make_pair(r, other) : std::make_pair(other, r);
}

}  // namespace constaring
