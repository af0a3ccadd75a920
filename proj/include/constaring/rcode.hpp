#pragma once

#include <string>

#include "fpcode.hpp"
#include "rpoly.hpp"

namespace constaring {

/**
 * A linear code over R = F_p[u]/(u^4 - u), stored as its four CRT component
 * codes over F_p: C = eta1 C1 + eta2 C2 + eta3 C3 + eta4 C4. Componentwise
 * storage is lossless (R is isomorphic to F_p^4) and reduces every question
 * about C to four questions over F_p; in particular |C| = |C1||C2||C3||C4|
 * and duality acts componentwise.
 */
class RLinearCode {
   public:
    RLinearCode(const PrimeField& f, int n, std::vector<FpLinearCode> comps)
        : f_(f), n_(n), comps_(std::move(comps)) {
        if (comps_.size() != 4) throw LengthMismatch("an R-linear code has exactly 4 components");
        for (const auto& c : comps_) {
            if (c.length() != n_) throw LengthMismatch("component length differs from code length");
        }
    }

    static RLinearCode zero(const PrimeField& f, int n) {
        return RLinearCode(f, n, std::vector<FpLinearCode>(4, FpLinearCode::zero(f, n)));
    }

    static RLinearCode full_module(const PrimeField& f, int n) {
        return RLinearCode(f, n, std::vector<FpLinearCode>(4, FpLinearCode::full_space(f, n)));
    }

    const PrimeField& field() const noexcept { return f_; }
    int length() const noexcept { return n_; }

    /// Component code C_i, i in 1..4.
    const FpLinearCode& comp(int i) const {
        if (i < 1 || i > 4) throw Error("component index must be in 1..4");
        return comps_[static_cast<size_t>(i - 1)];
    }

    /// log_p |C| = dim C1 + dim C2 + dim C3 + dim C4.
    int size_exponent() const noexcept {
        int e = 0;
        for (const auto& c : comps_) e += c.dim();
        return e;
    }

    bool contains(const std::vector<RingElement>& v, const IdempotentSet& ids) const {
        if (static_cast<int>(v.size()) != n_) throw LengthMismatch("vector length differs from code length");
        for (int i = 0; i < 4; ++i) {
            std::vector<i64> comp_vec(v.size());
            for (size_t j = 0; j < v.size(); ++j) comp_vec[j] = ids.decompose(v[j])[static_cast<size_t>(i)];
            if (!comps_[static_cast<size_t>(i)].contains(comp_vec)) return false;
        }
        return true;
    }

    friend bool operator==(const RLinearCode& a, const RLinearCode& b) noexcept {
        return a.f_.p() == b.f_.p() && a.n_ == b.n_ && a.comps_ == b.comps_;
    }

   private:
    PrimeField f_;
    int n_;
    std::vector<FpLinearCode> comps_;
};

/// The constacyclic shift (r_0, ..., r_{n-1}) -> (lambda r_{n-1}, r_0, ...)
/// with lambda = 1 - 2u^3.
inline std::vector<RingElement> rho_shift(const std::vector<RingElement>& v, const PrimeField& f) {
    auto out = rotate_right(v);
    out[0] = ring_mul(ring_lambda(f), out[0], f);
    return out;
}

/// An F_p-spanning set of C: the vectors eta_i * (basis rows of C_i).
inline std::vector<std::vector<RingElement>> spanning_vectors(const RLinearCode& c,
                                                              const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    std::vector<std::vector<RingElement>> out;
    for (int i = 1; i <= 4; ++i) {
        for (const auto& row : c.comp(i).basis()) {
            std::vector<RingElement> v(row.size());
            for (size_t j = 0; j < row.size(); ++j) v[j] = ring_scale(ids.eta(i), row[j], f);
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// Visits all |C| codewords of C as vectors over R. Materializes the four
/// component codebooks (scaled by their eta_i) first, so only call this
/// within the cap; the combination layer reuses partial sums, costing about
/// n ring additions per word.
template <class Visitor>
void for_each_r_codeword(const RLinearCode& c, const IdempotentSet& ids, u64 cap, Visitor&& visit) {
    const PrimeField& f = ids.field();
    u64 total = 1;
    for (int i = 1; i <= 4; ++i) {
        for (int j = 0; j < c.comp(i).dim(); ++j) {
            total *= static_cast<u64>(f.p());
            if (total > cap) throw TooLarge("R-codeword enumeration exceeds the configured cap");
        }
    }
    const int n = c.length();
    std::array<std::vector<std::vector<RingElement>>, 4> books;
    for (int i = 1; i <= 4; ++i) {
        auto& book = books[static_cast<size_t>(i - 1)];
        for_each_codeword(c.comp(i), cap, [&](const std::vector<i64>& w) {
            std::vector<RingElement> scaled(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                scaled[static_cast<size_t>(j)] = ring_scale(ids.eta(i), w[static_cast<size_t>(j)], f);
            }
            book.push_back(std::move(scaled));
        });
    }
    std::vector<RingElement> acc2(static_cast<size_t>(n)), acc3(static_cast<size_t>(n)),
        word(static_cast<size_t>(n));
    for (const auto& w1 : books[0]) {
        for (const auto& w2 : books[1]) {
            for (int j = 0; j < n; ++j) {
                acc2[static_cast<size_t>(j)] = ring_add(w1[static_cast<size_t>(j)], w2[static_cast<size_t>(j)], f);
            }
            for (const auto& w3 : books[2]) {
                for (int j = 0; j < n; ++j) {
                    acc3[static_cast<size_t>(j)] = ring_add(acc2[static_cast<size_t>(j)], w3[static_cast<size_t>(j)], f);
                }
                for (const auto& w4 : books[3]) {
                    for (int j = 0; j < n; ++j) {
                        word[static_cast<size_t>(j)] =
                            ring_add(acc3[static_cast<size_t>(j)], w4[static_cast<size_t>(j)], f);
                    }
                    visit(static_cast<const std::vector<RingElement>&>(word));
                }
            }
        }
    }
}

/// Generator data of a (1-2u^3)-constacyclic code: the four monic component
/// generators, their cofactors, and both assembled over R.
struct ConstaGenerators {
    std::array<FpPoly, 4> g;  // g1 | x^n-1, g2..g4 | x^n+1
    std::array<FpPoly, 4> h;  // g_i h_i = x^n -+ 1
    RPoly g_assembled;        // sum eta_i g_i
    RPoly h_assembled;        // sum eta_i h_i; g * h = x^n - (1 - 2u^3)
};

/**
 * Builds the (1-2u^3)-constacyclic code with component generators g1..g4:
 * C1 is the cyclic code of g1 mod x^n - 1 and C2..C4 the negacyclic codes of
 * g2..g4 mod x^n + 1. |C| = p^(4n - sum deg g_i).
 */
inline std::pair<RLinearCode, ConstaGenerators> consta_build(const std::array<FpPoly, 4>& gens,
                                                             int n, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    if (n % f.p() == 0) throw RepeatedRoots("gcd(n, p) must be 1");
    std::vector<FpLinearCode> comps;
    std::array<FpPoly, 4> g{FpPoly(f), FpPoly(f), FpPoly(f), FpPoly(f)};
    std::array<FpPoly, 4> h{FpPoly(f), FpPoly(f), FpPoly(f), FpPoly(f)};
    for (int i = 0; i < 4; ++i) {
        const int sign = i == 0 ? 1 : -1;
        const FpPoly modulus = FpPoly::xn_minus(f, n, sign);
        const FpPoly gi = gens[static_cast<size_t>(i)].monic();
        if (gi.is_zero()) {
            throw NotADivisor("g" + std::to_string(i + 1) + " must be nonzero");
        }
        auto [quot, rem] = poly_divmod(modulus, gi);
        if (!rem.is_zero()) {
            throw NotADivisor("g" + std::to_string(i + 1) + std::string(" must divide x^n ") +
                              (sign == 1 ? "- 1" : "+ 1"));
        }
        g[static_cast<size_t>(i)] = gi;
        h[static_cast<size_t>(i)] = quot;
        comps.push_back(FpLinearCode::cyclic_from_gpoly(gi, n, sign, f));
    }
    ConstaGenerators cg{g, h, assemble(g, ids), assemble(h, ids)};
    return {RLinearCode(f, n, std::move(comps)), std::move(cg)};
}

/// The ideal <v(x)> in R[x]/(x^n - (1-2u^3)) as an R-linear code: component i
/// is spanned by the shifts of the i-th CRT component of v, reduced mod
/// x^n - 1 (i = 1) resp. x^n + 1 (i = 2, 3, 4).
inline RLinearCode consta_code_from_rpoly(const RPoly& v, int n, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    const auto comps = components(v, ids);
    std::vector<FpLinearCode> codes;
    for (int i = 0; i < 4; ++i) {
        const int sign = i == 0 ? 1 : -1;
        std::vector<i64> row(reduce_mod_xn(comps[static_cast<size_t>(i)], n, sign).coeffs());
        row.resize(static_cast<size_t>(n), 0);
        std::vector<std::vector<i64>> rows;
        for (int shift = 0; shift < n; ++shift) {
            rows.push_back(row);
            row = sign == 1 ? sigma_shift(row, f) : gamma_shift(row, f);
        }
        codes.push_back(FpLinearCode::from_generators(std::move(rows), f, n));
    }
    return RLinearCode(f, n, std::move(codes));
}

/// Cyclic code over R: all four component generators divide x^n - 1.
inline RLinearCode cyclic_build(const std::array<FpPoly, 4>& gens, int n, const IdempotentSet& ids) {
    const PrimeField& f = ids.field();
    std::vector<FpLinearCode> comps;
    for (int i = 0; i < 4; ++i) {
        comps.push_back(FpLinearCode::cyclic_from_gpoly(gens[static_cast<size_t>(i)].monic(), n, 1, f));
    }
    return RLinearCode(f, n, std::move(comps));
}

/// C is (1-2u^3)-constacyclic iff C1 is sigma-closed and C2, C3, C4 are
/// gamma-closed; checked directly on the component bases.
inline bool is_lambda_constacyclic(const RLinearCode& c) {
    if (!is_sigma_closed(c.comp(1))) return false;
    for (int i = 2; i <= 4; ++i) {
        if (!is_gamma_closed(c.comp(i))) return false;
    }
    return true;
}

namespace detail {

/// 2^e as a decimal string (digit-vector doubling; e can exceed 63 bits' worth).
inline std::string pow2_decimal(int e) {
    std::vector<int> digits{1};
    for (int i = 0; i < e; ++i) {
        int carry = 0;
        for (int& d : digits) {
            const int v = d * 2 + carry;
            d = v % 10;
            carry = v / 10;
        }
        while (carry > 0) {
            digits.push_back(carry % 10);
            carry /= 10;
        }
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
}

}  // namespace detail

struct ConstaCount {
    int r1;                     // irreducible factors of x^n - 1
    int r2;                     // irreducible factors of x^n + 1
    std::string count;          // 2^r1 * 8^r2, decimal
    std::optional<u64> value;   // same, when it fits 64 bits
};

/// Number of (1-2u^3)-constacyclic codes of length n over R: 2^r1 * 8^r2.
inline ConstaCount count_constacyclic(int n, const PrimeField& f) {
    const int r1 = static_cast<int>(factor_xn_pm1(n, 1, f).size());
    const int r2 = static_cast<int>(factor_xn_pm1(n, -1, f).size());
    const int e = r1 + 3 * r2;
    ConstaCount out{r1, r2, detail::pow2_decimal(e), std::nullopt};
    if (e < 64) out.value = u64(1) << e;
    return out;
}

/// Componentwise Euclidean dual; |C| * |C_perp| = p^(4n).
inline RLinearCode dual(const RLinearCode& c) {
    std::vector<FpLinearCode> comps;
    for (int i = 1; i <= 4; ++i) comps.push_back(dual(c.comp(i)));
    return RLinearCode(c.field(), c.length(), std::move(comps));
}

inline bool is_self_dual(const RLinearCode& c) {
    for (int i = 1; i <= 4; ++i) {
        if (!(dual(c.comp(i)) == c.comp(i))) return false;
    }
    return true;
}

/// Applies the same monomial transformation (whose scalars live in F_p) to
/// all four components.
inline RLinearCode apply_monomial(const RLinearCode& c, const MonomialMap& m) {
    std::vector<FpLinearCode> comps;
    for (int i = 1; i <= 4; ++i) comps.push_back(apply_monomial(c.comp(i), m));
    return RLinearCode(c.field(), c.length(), std::move(comps));
}

struct CyclicEquivalence {
    bool equivalent;
    bool odd_length;            // true: witnessed by x -> (1-2u^3) x
    std::optional<i64> delta;   // even case: delta^n = -1 in F_p
};

/**
 * Decides whether every (1-2u^3)-constacyclic code of length n over R is
 * scalar equivalent to a cyclic code: yes when n is odd, and for n = 2^b n'
 * (n' odd, b >= 1) exactly when p = 1 (mod 2^{b+1}). In the even case the
 * witness delta is the smallest n-th root of -1 in F_p.
 */
inline CyclicEquivalence equivalent_to_cyclic(int n, const PrimeField& f) {
    if (n % f.p() == 0) throw RepeatedRoots("gcd(n, p) must be 1");
    if (n % 2 == 1) return {true, true, std::nullopt};
    i64 two_power = 2;
    int b = 1;
    i64 rest = n / 2;
    while (rest % 2 == 0) {
        rest /= 2;
        two_power *= 2;
        ++b;
    }
    if ((f.p() - 1) % (2 * two_power) != 0) return {false, false, std::nullopt};
    for (i64 delta = 1; delta < f.p(); ++delta) {
        if (f.pow(delta, n) == f.p() - 1) return {true, false, delta};
    }
    return {false, false, std::nullopt};  // unreachable: the congruence guarantees a root
}

}  // namespace constaring
