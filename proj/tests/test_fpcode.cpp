#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "constaring/fpcode.hpp"
#include "constaring/qr.hpp"

using namespace constaring;

namespace {

// Independent MacWilliams oracle: the dual weight enumerator from the primal
// one, W_dual(x, y) = |C|^-1 W(x + (p-1)y, x - y), expanded with exact
// 128-bit arithmetic.
std::vector<u64> macwilliams_transform(const std::vector<u64>& w, i64 p, int dim) {
    const int n = static_cast<int>(w.size()) - 1;
    std::vector<std::vector<__int128>> binom(static_cast<size_t>(n) + 1,
                                             std::vector<__int128>(static_cast<size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j) {
            binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        }
    }
    std::vector<__int128> out(static_cast<size_t>(n) + 1, 0);
    for (int wt = 0; wt <= n; ++wt) {
        if (w[static_cast<size_t>(wt)] == 0) continue;
        // expand (x + (p-1)y)^(n-wt) * (x - y)^wt, collecting y^k coefficients
        for (int i = 0; i <= n - wt; ++i) {
            __int128 pow_pm1 = 1;
            for (int t = 0; t < i; ++t) pow_pm1 *= (p - 1);
            for (int j = 0; j <= wt; ++j) {
                const int k = i + j;
                __int128 term = binom[static_cast<size_t>(n - wt)][static_cast<size_t>(i)] * pow_pm1 *
                                binom[static_cast<size_t>(wt)][static_cast<size_t>(j)];
                if (j % 2 == 1) term = -term;
                out[static_cast<size_t>(k)] += term * static_cast<__int128>(w[static_cast<size_t>(wt)]);
            }
        }
    }
    __int128 size = 1;
    for (int i = 0; i < dim; ++i) size *= p;
    std::vector<u64> result(out.size());
    for (size_t k = 0; k < out.size(); ++k) {
        REQUIRE(out[k] % size == 0);
        REQUIRE(out[k] >= 0);
        result[k] = static_cast<u64>(out[k] / size);
    }
    return result;
}

}  // namespace

TEST_CASE("canonical construction from generators") {
    const PrimeField f(7);
    const auto rep = FpLinearCode::from_generators({{1, 1, 1, 1, 1}}, f, 5);
    CHECK(rep.dim() == 1);
    CHECK(rep.contains({3, 3, 3, 3, 3}));
    CHECK_FALSE(rep.contains({1, 2, 1, 1, 1}));

    CHECK(FpLinearCode::from_generators({}, f, 4).dim() == 0);
    const auto full = FpLinearCode::from_generators({{1, 0}, {0, 1}, {1, 1}}, f, 2);
    CHECK(full.dim() == 2);
    CHECK(full == FpLinearCode::full_space(f, 2));

    // canonical: any spanning set of the same space gives the same basis
    const auto a = FpLinearCode::from_generators({{1, 2, 3, 4}, {2, 4, 6, 1}}, f, 4);
    const auto b = FpLinearCode::from_generators({{3, 6, 2, 5}, {1, 2, 3, 4}, {4, 1, 5, 2}}, f, 4);
    CHECK(a == b);

    CHECK_THROWS_AS(FpLinearCode::from_generators({{1, 1}}, f, 3), LengthMismatch);
}

TEST_CASE("cyclic code from a generator polynomial") {
    const PrimeField f(7);
    const auto rep = FpLinearCode::cyclic_from_gpoly(FpPoly(f, {1, 1, 1, 1, 1}), 5, 1, f);
    CHECK(rep.dim() == 1);
    CHECK(rep == FpLinearCode::from_generators({{1, 1, 1, 1, 1}}, f, 5));
    CHECK(rep.tag() == ShiftTag::cyclic);

    CHECK(FpLinearCode::cyclic_from_gpoly(FpPoly::constant(f, 1), 6, 1, f) ==
          FpLinearCode::full_space(f, 6));

    const auto c = FpLinearCode::cyclic_from_gpoly(FpPoly(f, {1, -3, 1}), 8, 1, f);
    CHECK(c.dim() == 6);
    CHECK(is_sigma_closed(c));

    CHECK_THROWS_AS(FpLinearCode::cyclic_from_gpoly(FpPoly(f, {1, 1}), 8, -1, f), NotADivisor);
    const auto nega = FpLinearCode::cyclic_from_gpoly(FpPoly(f, {-1, -1, 1}), 8, -1, f);
    CHECK(is_gamma_closed(nega));
    CHECK_FALSE(is_sigma_closed(nega));
}

TEST_CASE("codes from idempotents") {
    const QRSystem sys = QRSystem::make(7, 19, 4);
    const PrimeField& f = sys.field();
    const auto q_code = FpLinearCode::from_idempotent(sys.e1(), 19, f);
    CHECK(q_code.dim() == 10);

    // the idempotent is the multiplicative identity of its code
    for (const auto& row : q_code.basis()) {
        CHECK(mulmod_cyclic(FpPoly(f, std::vector<i64>(row)), sys.e1(), 19) ==
              FpPoly(f, std::vector<i64>(row)));
    }

    const auto rep = FpLinearCode::from_idempotent(sys.unit_rep(), 19, f);
    CHECK(rep.dim() == 1);
    CHECK(rep.contains(std::vector<i64>(19, 1)));

    CHECK(FpLinearCode::from_idempotent(FpPoly(f), 19, f).dim() == 0);
    CHECK_THROWS_AS(FpLinearCode::from_idempotent(FpPoly(f, {0, 1}), 19, f), NotIdempotent);
}

TEST_CASE("generator polynomial recovered from an idempotent") {
    const QRSystem sys = QRSystem::make(7, 19, 4);
    const PrimeField& f = sys.field();
    const FpPoly r = gen_poly_from_idempotent(sys.e1(), 19, f);
    CHECK(r.degree() == 9);  // |Q_19| = 9
    CHECK(r.leading() == 1);
    CHECK(divides(r, FpPoly::xn_minus(f, 19, 1)));
    CHECK(FpLinearCode::cyclic_from_gpoly(r, 19, 1, f) == FpLinearCode::from_idempotent(sys.e1(), 19, f));

    const QRSystem sys3 = QRSystem::make(7, 3);
    CHECK(gen_poly_from_idempotent(sys3.unit_rep(), 3, sys3.field()) ==
          FpPoly(sys3.field(), {1, 1, 1}));
    CHECK(gen_poly_from_idempotent(FpPoly::constant(f, 1), 19, f) == FpPoly::constant(f, 1));

    // the dual of <r(x)> is the expurgated code <(x - 1) r(x)> at q = 3 (mod 4)
    const FpPoly expurgated = FpPoly(f, {-1, 1}) * r;
    CHECK(dual(FpLinearCode::from_idempotent(sys.e1(), 19, f)) ==
          FpLinearCode::cyclic_from_gpoly(expurgated, 19, 1, f));
}

TEST_CASE("duals") {
    const PrimeField f(7);
    const auto rep = FpLinearCode::from_generators({{1, 1, 1, 1, 1}}, f, 5);
    const auto d = dual(rep);
    CHECK(d.dim() == 4);
    for (const auto& row : d.basis()) {
        i64 s = 0;
        for (i64 v : row) s = f.add(s, v);
        CHECK(s == 0);
    }
    CHECK(dual(d) == rep);
    CHECK(dual(FpLinearCode::full_space(f, 3)) == FpLinearCode::zero(f, 3));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<i64> coeff(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<i64>> rows(1 + rng() % 4, std::vector<i64>(6));
        for (auto& row : rows) {
            for (auto& v : row) v = coeff(rng);
        }
        const auto c = FpLinearCode::from_generators(std::move(rows), f, 6);
        CHECK(c.dim() + dual(c).dim() == 6);
        CHECK(dual(dual(c)) == c);
    }
}

TEST_CASE("dual of a constacyclic code is generated by the reciprocal cofactor") {
    const PrimeField f(7);
    for (int sign : {1, -1}) {
        for (const FpPoly& g : factor_xn_pm1(8, sign, f)) {
            const auto [h, rem] = poly_divmod(FpPoly::xn_minus(f, 8, sign), g);
            REQUIRE(rem.is_zero());
            const auto c = FpLinearCode::cyclic_from_gpoly(g, 8, sign, f);
            CHECK(dual(c) == FpLinearCode::cyclic_from_gpoly(reciprocal(h), 8, sign, f));
        }
    }
}

TEST_CASE("lemma 4(i): dual of an idempotent code is generated by 1 - E(1/x)") {
    const std::vector<std::pair<i64, i64>> systems{{7, 3}, {7, 19}, {19, 5}};
    for (const auto& [p, q] : systems) {
        const QRSystem sys = QRSystem::make(p, q);
        const PrimeField& f = sys.field();
        const int qi = static_cast<int>(q);
        for (const FpPoly* e : {&sys.e1(), &sys.e2(), &sys.et1(), &sys.et2()}) {
            const FpPoly dual_idem =
                cyclic_reduce(FpPoly::constant(f, 1) - substitute_x_inverse(*e, qi), qi);
            CHECK(dual(FpLinearCode::from_idempotent(*e, qi, f)) ==
                  FpLinearCode::from_idempotent(dual_idem, qi, f));
        }
    }
}

TEST_CASE("lemma 4(ii): intersection and sum match the idempotent formulas") {
    const std::vector<std::pair<i64, i64>> systems{{7, 3}, {7, 19}, {19, 5}};
    for (const auto& [p, q] : systems) {
        const QRSystem sys = QRSystem::make(p, q);
        const PrimeField& f = sys.field();
        const int qi = static_cast<int>(q);
        const std::vector<const FpPoly*> idems{&sys.e1(), &sys.e2(), &sys.et1(), &sys.et2()};
        for (const FpPoly* e1 : idems) {
            for (const FpPoly* e2 : idems) {
                const auto c1 = FpLinearCode::from_idempotent(*e1, qi, f);
                const auto c2 = FpLinearCode::from_idempotent(*e2, qi, f);
                const FpPoly prod = mulmod_cyclic(*e1, *e2, qi);
                const FpPoly sum_idem = cyclic_reduce(*e1 + *e2 - prod, qi);
                CHECK(intersect(c1, c2) == FpLinearCode::from_idempotent(prod, qi, f));
                CHECK(code_sum(c1, c2) == FpLinearCode::from_idempotent(sum_idem, qi, f));
            }
        }
    }
}

TEST_CASE("intersection and sum are idempotent and respect length checks") {
    const PrimeField f(7);
    const auto c = FpLinearCode::from_generators({{1, 2, 3, 0}, {0, 1, 1, 1}}, f, 4);
    CHECK(intersect(c, c) == c);
    CHECK(code_sum(c, c) == c);
    CHECK_THROWS_AS(intersect(c, FpLinearCode::zero(f, 5)), LengthMismatch);

    // lemma 2 consequences at the code level
    const QRSystem sys = QRSystem::make(7, 19, 4);
    const auto q1 = FpLinearCode::from_idempotent(sys.e1(), 19, f);
    const auto q2 = FpLinearCode::from_idempotent(sys.e2(), 19, f);
    CHECK(intersect(q1, q2) == FpLinearCode::from_idempotent(sys.unit_rep(), 19, f));
    const auto s1 = FpLinearCode::from_idempotent(sys.et1(), 19, f);
    const auto s2 = FpLinearCode::from_idempotent(sys.et2(), 19, f);
    CHECK(intersect(s1, s2) == FpLinearCode::zero(f, 19));
}

TEST_CASE("multipliers") {
    const QRSystem sys = QRSystem::make(7, 19, 4);
    const PrimeField& f = sys.field();
    const auto q1 = FpLinearCode::from_idempotent(sys.e1(), 19, f);
    const auto q2 = FpLinearCode::from_idempotent(sys.e2(), 19, f);
    for (i64 n : sys.non_residues()) {
        CHECK(multiplier(q1, n) == q2);
    }
    for (i64 r : sys.residues()) {
        CHECK(multiplier(q1, r) == q1);
    }
    CHECK(multiplier(q1, 1) == q1);

    // mu_n maps the residue support to the non-residue support
    const i64 n = sys.non_residues().front();
    std::vector<i64> j1_vec(19, 0), j2_vec(19, 0);
    for (i64 i : sys.residues()) j1_vec[static_cast<size_t>(i)] = 1;
    for (i64 i : sys.non_residues()) j2_vec[static_cast<size_t>(i)] = 1;
    std::vector<i64> mapped(19, 0);
    for (int i = 0; i < 19; ++i) mapped[static_cast<size_t>((n * i) % 19)] = j1_vec[static_cast<size_t>(i)];
    CHECK(mapped == j2_vec);

    CHECK_THROWS_AS(multiplier(FpLinearCode::full_space(f, 6), 3), NotCoprime);
}

TEST_CASE("minimum distance by enumeration") {
    const PrimeField f(7);
    CHECK(min_distance(FpLinearCode::from_generators({{1, 1, 1, 1, 1}}, f, 5)) == 5);
    CHECK(min_distance(FpLinearCode::full_space(f, 2)) == 1);
    CHECK_FALSE(min_distance(FpLinearCode::zero(f, 4)).has_value());
    CHECK_THROWS_AS(min_distance(FpLinearCode::full_space(f, 12), 1000), TooLarge);
}

TEST_CASE("weight enumerators") {
    const PrimeField f(7);
    const auto rep3 = FpLinearCode::from_generators({{1, 1, 1}}, f, 3);
    const auto w = weight_enumerator(rep3);
    CHECK(w == std::vector<u64>{1, 0, 0, 6});
    CHECK(weight_enumerator(FpLinearCode::zero(f, 3)) == std::vector<u64>{1, 0, 0, 0});
}

TEST_CASE("weight enumerator vs MacWilliams transform of the dual") {
    const QRSystem sys = QRSystem::make(7, 3);
    const PrimeField& f = sys.field();
    for (const FpPoly* e : {&sys.e1(), &sys.et1()}) {
        const auto c = FpLinearCode::from_idempotent(*e, 3, f);
        const auto w_primal = weight_enumerator(c);
        const auto w_dual = weight_enumerator(dual(c));
        CHECK(macwilliams_transform(w_primal, 7, c.dim()) == w_dual);
        CHECK(macwilliams_transform(w_dual, 7, dual(c).dim()) == w_primal);
    }
}

TEST_CASE("monomial maps preserve dimension and weight enumerator") {
    const PrimeField f(7);
    const auto c = FpLinearCode::from_generators({{1, 2, 3, 4, 5, 0}, {0, 1, 0, 6, 2, 1}}, f, 6);
    CHECK(apply_monomial(c, MonomialMap::identity(6)) == c);

    const auto rep = FpLinearCode::from_generators({{1, 1, 1}}, f, 3);
    MonomialMap scale2 = MonomialMap::identity(3);
    scale2.scalars = {2, 2, 2};
    CHECK(apply_monomial(rep, scale2) == rep);

    std::mt19937 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialMap m = MonomialMap::identity(6);
        std::shuffle(m.perm.begin(), m.perm.end(), rng);
        for (auto& s : m.scalars) s = 1 + static_cast<i64>(rng() % 6);
        const auto image = apply_monomial(c, m);
        CHECK(image.dim() == c.dim());
        CHECK(weight_enumerator(image) == weight_enumerator(c));
    }

    MonomialMap bad = MonomialMap::identity(6);
    bad.scalars[2] = 0;
    CHECK_THROWS_AS(apply_monomial(c, bad), NotAUnit);
    CHECK_THROWS_AS(apply_monomial(c, MonomialMap::identity(5)), LengthMismatch);
}

TEST_CASE("delta-power scaling exchanges negacyclic and cyclic codes at p = 97") {
    const PrimeField f(97);  // 97 = 1 (mod 16), so an 8th root of -1 exists
    i64 delta = 0;
    for (i64 x = 2; x < 97; ++x) {
        if (f.pow(x, 8) == 96) {
            delta = x;
            break;
        }
    }
    REQUIRE(delta != 0);

    // negacyclic -> cyclic with scalars delta^{-i}
    const FpPoly g = factor_xn_pm1(8, -1, f).front();
    const auto nega = FpLinearCode::cyclic_from_gpoly(g, 8, -1, f);
    MonomialMap to_cyclic = MonomialMap::identity(8);
    for (int i = 0; i < 8; ++i) to_cyclic.scalars[static_cast<size_t>(i)] = f.pow(f.inv(delta), i);
    CHECK(is_gamma_closed(nega));
    CHECK(is_sigma_closed(apply_monomial(nega, to_cyclic)));

    // cyclic <x+1> -> negacyclic with scalars delta^{i}
    const auto cyc = FpLinearCode::cyclic_from_gpoly(FpPoly(f, {1, 1}), 8, 1, f);
    MonomialMap to_nega = MonomialMap::identity(8);
    for (int i = 0; i < 8; ++i) to_nega.scalars[static_cast<size_t>(i)] = f.pow(delta, i);
    CHECK(is_sigma_closed(cyc));
    CHECK(is_gamma_closed(apply_monomial(cyc, to_nega)));
}
