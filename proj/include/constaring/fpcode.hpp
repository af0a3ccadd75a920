#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace constaring {

namespace detail {

/// In-place reduced row echelon form; zero rows are dropped. Returns the
/// pivot columns. The result is the canonical basis of the row space, so two
/// subspaces are equal iff their RREF matrices are identical.
inline std::vector<int> rref(std::vector<std::vector<i64>>& m, const PrimeField& f) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int n = static_cast<int>(m.front().size());
    size_t r = 0;
    for (int col = 0; col < n && r < m.size(); ++col) {
        size_t pr = r;
        while (pr < m.size() && m[pr][static_cast<size_t>(col)] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[pr], m[r]);
        const i64 inv = f.inv(m[r][static_cast<size_t>(col)]);
        for (auto& v : m[r]) v = f.mul(v, inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            const i64 s = m[i][static_cast<size_t>(col)];
            if (s == 0) continue;
            for (int j = 0; j < n; ++j) {
                m[i][static_cast<size_t>(j)] =
                    f.sub(m[i][static_cast<size_t>(j)], f.mul(s, m[r][static_cast<size_t>(j)]));
            }
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    return pivots;
}

}  // namespace detail

/// Construction marker for codes built with a shift structure.
enum class ShiftTag { none, cyclic, negacyclic };

/// Cyclic shift (r_0, ..., r_{n-1}) -> (r_{n-1}, r_0, ..., r_{n-2}).
template <class T>
std::vector<T> rotate_right(const std::vector<T>& v) {
    std::vector<T> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
    return out;
}

inline std::vector<i64> sigma_shift(const std::vector<i64>& v, const PrimeField&) {
    return rotate_right(v);
}

/// Negacyclic shift: like sigma but the wrapped coordinate is negated.
inline std::vector<i64> gamma_shift(const std::vector<i64>& v, const PrimeField& f) {
    auto out = rotate_right(v);
    out[0] = f.neg(out[0]);
    return out;
}

/**
 * A linear code over F_p in canonical form: the stored basis is the reduced
 * row echelon form of any generating set, so operator== decides code
 * equality. An optional tag records whether the code was built as a cyclic
 * or negacyclic ideal.
 */
class FpLinearCode {
   public:
    static FpLinearCode from_generators(std::vector<std::vector<i64>> rows, const PrimeField& f,
                                        int n, ShiftTag tag = ShiftTag::none) {
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != n) {
                throw LengthMismatch("generator row length differs from code length");
            }
            for (i64& v : row) v = f.reduce(v);
        }
        detail::rref(rows, f);
        return FpLinearCode(f, n, std::move(rows), tag);
    }

    static FpLinearCode zero(const PrimeField& f, int n) { return FpLinearCode(f, n, {}, ShiftTag::none); }

    static FpLinearCode full_space(const PrimeField& f, int n) {
        std::vector<std::vector<i64>> rows(static_cast<size_t>(n),
                                           std::vector<i64>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        return FpLinearCode(f, n, std::move(rows), ShiftTag::none);
    }

    /// The cyclic (sign = +1) or negacyclic (sign = -1) code generated by g,
    /// which must divide x^n - sign exactly.
    static FpLinearCode cyclic_from_gpoly(const FpPoly& g, int n, int sign, const PrimeField& f) {
        if (g.is_zero() || !divides(g, FpPoly::xn_minus(f, n, sign))) {
            throw NotADivisor("generator polynomial must divide x^n -+ 1");
        }
        std::vector<std::vector<i64>> rows;
        for (int shift = 0; shift + g.degree() < n; ++shift) {
            std::vector<i64> row(static_cast<size_t>(n), 0);
            for (int j = 0; j <= g.degree(); ++j) row[static_cast<size_t>(shift + j)] = g[j];
            rows.push_back(std::move(row));
        }
        detail::rref(rows, f);
        return FpLinearCode(f, n, std::move(rows), sign == 1 ? ShiftTag::cyclic : ShiftTag::negacyclic);
    }

    /// The cyclic code of length q generated by an idempotent E (E^2 = E mod
    /// x^q - 1); spanned by the cyclic shifts of E.
    static FpLinearCode from_idempotent(const FpPoly& e, int q, const PrimeField& f) {
        const FpPoly reduced = cyclic_reduce(e, q);
        if (!(mulmod_cyclic(reduced, reduced, q) == reduced)) {
            throw NotIdempotent("generator is not idempotent mod x^q - 1");
        }
        std::vector<std::vector<i64>> rows;
        std::vector<i64> row(static_cast<size_t>(q), 0);
        for (int j = 0; j <= reduced.degree(); ++j) row[static_cast<size_t>(j)] = reduced[j];
        for (int shift = 0; shift < q; ++shift) {
            rows.push_back(row);
            row = rotate_right(row);
        }
        detail::rref(rows, f);
        return FpLinearCode(f, q, std::move(rows), ShiftTag::cyclic);
    }

    const PrimeField& field() const noexcept { return f_; }
    int length() const noexcept { return n_; }
    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<i64>>& basis() const noexcept { return rows_; }
    ShiftTag tag() const noexcept { return tag_; }

    bool contains(std::vector<i64> v) const {
        if (static_cast<int>(v.size()) != n_) throw LengthMismatch("vector length differs from code length");
        for (i64& x : v) x = f_.reduce(x);
        size_t row = 0;
        for (int col = 0; col < n_ && row < rows_.size(); ++col) {
            if (rows_[row][static_cast<size_t>(col)] != 1) continue;  // advance to this row's pivot
            const i64 s = v[static_cast<size_t>(col)];
            if (s != 0) {
                for (int j = 0; j < n_; ++j) {
                    v[static_cast<size_t>(j)] =
                        f_.sub(v[static_cast<size_t>(j)], f_.mul(s, rows_[row][static_cast<size_t>(j)]));
                }
            }
            ++row;
        }
        return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
    }

    bool subset_of(const FpLinearCode& other) const {
        for (const auto& row : rows_) {
            if (!other.contains(row)) return false;
        }
        return true;
    }

    friend bool operator==(const FpLinearCode& a, const FpLinearCode& b) noexcept {
        return a.f_.p() == b.f_.p() && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

   private:
    FpLinearCode(const PrimeField& f, int n, std::vector<std::vector<i64>> rows, ShiftTag tag)
        : f_(f), n_(n), rows_(std::move(rows)), tag_(tag) {}

    PrimeField f_;
    int n_;
    std::vector<std::vector<i64>> rows_;  // RREF, full rank
    ShiftTag tag_;
};

/// Euclidean dual: the null space of the generator matrix.
inline FpLinearCode dual(const FpLinearCode& c) {
    const PrimeField& f = c.field();
    const int n = c.length();
    auto m = c.basis();
    const auto pivots = detail::rref(m, f);  // already RREF; recomputes pivot columns
    std::vector<std::vector<i64>> rows;
    size_t next_pivot = 0;
    for (int col = 0; col < n; ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<i64> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[static_cast<size_t>(pivots[i])] = f.neg(m[i][static_cast<size_t>(col)]);
        }
        rows.push_back(std::move(v));
    }
    return FpLinearCode::from_generators(std::move(rows), f, n);
}

inline FpLinearCode code_sum(const FpLinearCode& a, const FpLinearCode& b) {
    if (a.length() != b.length() || a.field() != b.field()) {
        throw LengthMismatch("code sum needs equal length and field");
    }
    auto rows = a.basis();
    const auto& rb = b.basis();
    rows.insert(rows.end(), rb.begin(), rb.end());
    return FpLinearCode::from_generators(std::move(rows), a.field(), a.length());
}

inline FpLinearCode intersect(const FpLinearCode& a, const FpLinearCode& b) {
    if (a.length() != b.length() || a.field() != b.field()) {
        throw LengthMismatch("code intersection needs equal length and field");
    }
    return dual(code_sum(dual(a), dual(b)));
}

/// Coordinate permutation i -> s*i mod n (the multiplier map on exponents).
inline FpLinearCode multiplier(const FpLinearCode& c, i64 s, ShiftTag tag = ShiftTag::cyclic) {
    const int n = c.length();
    s %= n;
    if (s < 0) s += n;
    if (std::gcd(s, static_cast<i64>(n)) != 1) {
        throw NotCoprime("multiplier needs gcd(s, n) = 1");
    }
    std::vector<std::vector<i64>> rows;
    for (const auto& row : c.basis()) {
        std::vector<i64> out(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            out[static_cast<size_t>((s * i) % n)] = row[static_cast<size_t>(i)];
        }
        rows.push_back(std::move(out));
    }
    return FpLinearCode::from_generators(std::move(rows), c.field(), n, tag);
}

/// A monomial transformation: coordinate i is scaled by scalars[i] and moved
/// to position perm[i].
struct MonomialMap {
    std::vector<int> perm;
    std::vector<i64> scalars;

    static MonomialMap identity(int n) {
        MonomialMap m;
        m.perm.resize(static_cast<size_t>(n));
        std::iota(m.perm.begin(), m.perm.end(), 0);
        m.scalars.assign(static_cast<size_t>(n), 1);
        return m;
    }
};

inline FpLinearCode apply_monomial(const FpLinearCode& c, const MonomialMap& m) {
    const int n = c.length();
    if (static_cast<int>(m.perm.size()) != n || static_cast<int>(m.scalars.size()) != n) {
        throw LengthMismatch("monomial map length differs from code length");
    }
    const PrimeField& f = c.field();
    for (i64 s : m.scalars) {
        if (f.reduce(s) == 0) throw NotAUnit("monomial scalars must be nonzero");
    }
    std::vector<std::vector<i64>> rows;
    for (const auto& row : c.basis()) {
        std::vector<i64> out(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            out[static_cast<size_t>(m.perm[static_cast<size_t>(i)])] =
                f.mul(m.scalars[static_cast<size_t>(i)], row[static_cast<size_t>(i)]);
        }
        rows.push_back(std::move(out));
    }
    return FpLinearCode::from_generators(std::move(rows), f, n);
}

inline bool is_sigma_closed(const FpLinearCode& c) {
    for (const auto& row : c.basis()) {
        if (!c.contains(sigma_shift(row, c.field()))) return false;
    }
    return true;
}

inline bool is_gamma_closed(const FpLinearCode& c) {
    for (const auto& row : c.basis()) {
        if (!c.contains(gamma_shift(row, c.field()))) return false;
    }
    return true;
}

/// Recovers the monic generator polynomial gcd(E, x^q - 1) of the cyclic code
/// generated by the idempotent E.
inline FpPoly gen_poly_from_idempotent(const FpPoly& e, int q, const PrimeField& f) {
    const FpPoly reduced = cyclic_reduce(e, q);
    if (!(mulmod_cyclic(reduced, reduced, q) == reduced)) {
        throw NotIdempotent("generator is not idempotent mod x^q - 1");
    }
    if (reduced.is_zero()) return FpPoly::xn_minus(f, q, 1);  // zero code
    return poly_gcd(reduced, FpPoly::xn_minus(f, q, 1));
}

namespace detail {

inline u64 codeword_count_checked(const FpLinearCode& c, u64 cap) {
    u64 count = 1;
    for (int i = 0; i < c.dim(); ++i) {
        count *= static_cast<u64>(c.field().p());
        if (count > cap) {
            throw TooLarge("codeword enumeration exceeds the configured cap");
        }
    }
    return count;
}

}  // namespace detail

/**
 * Visits every codeword (including zero) exactly once, in message-odometer
 * order. The word is updated incrementally: bumping message digit j adds
 * basis row j, and a digit rolling over from p-1 to 0 also adds its row
 * (-(p-1) = +1 mod p), so the amortized cost per word is near one row-add.
 */
template <class Visitor>
void for_each_codeword(const FpLinearCode& c, u64 cap, Visitor&& visit) {
    detail::codeword_count_checked(c, cap);
    const PrimeField& f = c.field();
    const int n = c.length();
    const int k = c.dim();
    std::vector<i64> word(static_cast<size_t>(n), 0);
    std::vector<i64> digits(static_cast<size_t>(k), 0);
    const auto add_row = [&](int j) {
        const auto& row = c.basis()[static_cast<size_t>(j)];
        for (int i = 0; i < n; ++i) {
            word[static_cast<size_t>(i)] = f.add(word[static_cast<size_t>(i)], row[static_cast<size_t>(i)]);
        }
    };
    visit(static_cast<const std::vector<i64>&>(word));
    while (true) {
        int j = 0;
        while (j < k && digits[static_cast<size_t>(j)] == f.p() - 1) {
            digits[static_cast<size_t>(j)] = 0;
            add_row(j);
            ++j;
        }
        if (j == k) break;
        ++digits[static_cast<size_t>(j)];
        add_row(j);
        visit(static_cast<const std::vector<i64>&>(word));
    }
}

inline constexpr u64 kDefaultEnumerationCap = u64(1) << 24;

/// Minimum Hamming weight over nonzero codewords by full enumeration;
/// absent for the zero code.
inline std::optional<i64> min_distance(const FpLinearCode& c, u64 cap = kDefaultEnumerationCap) {
    if (c.dim() == 0) return std::nullopt;
    i64 best = c.length() + 1;
    bool first = true;
    for_each_codeword(c, cap, [&](const std::vector<i64>& w) {
        if (first) {  // skip the zero word, which is visited first
            first = false;
            return;
        }
        i64 weight = 0;
        for (i64 v : w) weight += (v != 0);
        if (weight < best && weight > 0) best = weight;
    });
    return best;
}

/// W[w] = number of codewords of Hamming weight w, by full enumeration.
inline std::vector<u64> weight_enumerator(const FpLinearCode& c, u64 cap = kDefaultEnumerationCap) {
    std::vector<u64> w(static_cast<size_t>(c.length()) + 1, 0);
    for_each_codeword(c, cap, [&](const std::vector<i64>& word) {
        size_t weight = 0;
        for (i64 v : word) weight += (v != 0);
        ++w[weight];
    });
    return w;
}

}  // namespace constaring
