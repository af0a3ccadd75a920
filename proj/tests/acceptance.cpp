// Acceptance suite: reproduces every worked example and theorem-level claim
// at desk scale, one criterion per line, exact checks only. Exits nonzero if
// any criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "constaring/cli.hpp"

using namespace constaring;

namespace {

std::string g_fixtures_dir = "fixtures";

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

// Membership test with preallocated buffers and precomputed pivots, for the
// large enumeration sweeps.
struct FastMembership {
    const PrimeField& f;
    const IdempotentSet& ids;
    int n;
    std::array<std::vector<std::vector<i64>>, 4> rows;
    std::array<std::vector<int>, 4> pivots;
    std::array<std::vector<i64>, 4> buf;

    FastMembership(const RLinearCode& code, const IdempotentSet& ids_)
        : f(code.field()), ids(ids_), n(code.length()) {
        for (int i = 0; i < 4; ++i) {
            rows[static_cast<size_t>(i)] = code.comp(i + 1).basis();
            for (const auto& row : rows[static_cast<size_t>(i)]) {
                int pivot = 0;
                while (row[static_cast<size_t>(pivot)] == 0) ++pivot;
                pivots[static_cast<size_t>(i)].push_back(pivot);
            }
            buf[static_cast<size_t>(i)].assign(static_cast<size_t>(n), 0);
        }
    }

    bool contains(const std::vector<RingElement>& v) {
        for (int j = 0; j < n; ++j) {
            const auto x = ids.decompose(v[static_cast<size_t>(j)]);
            for (size_t i = 0; i < 4; ++i) buf[i][static_cast<size_t>(j)] = x[i];
        }
        for (size_t i = 0; i < 4; ++i) {
            auto& w = buf[i];
            for (size_t r = 0; r < rows[i].size(); ++r) {
                const i64 s = w[static_cast<size_t>(pivots[i][r])];
                if (s == 0) continue;
                const auto& row = rows[i][r];
                for (int j = 0; j < n; ++j) {
                    w[static_cast<size_t>(j)] = f.sub(w[static_cast<size_t>(j)], f.mul(s, row[static_cast<size_t>(j)]));
                }
            }
            for (i64 x : w) {
                if (x != 0) return false;
            }
        }
        return true;
    }
};

std::vector<FpPoly> all_divisors(int n, int sign, const PrimeField& f) {
    const auto factors = factor_xn_pm1(n, sign, f);
    std::vector<FpPoly> out;
    for (u64 bits = 0; bits < (u64(1) << factors.size()); ++bits) {
        FpPoly d = FpPoly::constant(f, 1);
        for (size_t i = 0; i < factors.size(); ++i) {
            if (bits >> i & 1) d = d * factors[i];
        }
        out.push_back(d);
    }
    return out;
}

// W(x + (p-1)y, x - y) / |C|, the dual weight enumerator.
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
        for (int i = 0; i <= n - wt; ++i) {
            __int128 pow_pm1 = 1;
            for (int t = 0; t < i; ++t) pow_pm1 *= (p - 1);
            for (int j = 0; j <= wt; ++j) {
                __int128 term = binom[static_cast<size_t>(n - wt)][static_cast<size_t>(i)] * pow_pm1 *
                                binom[static_cast<size_t>(wt)][static_cast<size_t>(j)];
                if (j % 2 == 1) term = -term;
                out[static_cast<size_t>(i + j)] += term * static_cast<__int128>(w[static_cast<size_t>(wt)]);
            }
        }
    }
    __int128 size = 1;
    for (int i = 0; i < dim; ++i) size *= p;
    std::vector<u64> result(out.size());
    for (size_t k = 0; k < out.size(); ++k) {
        if (out[k] % size != 0 || out[k] < 0) return {};  // not a valid transform
        result[k] = static_cast<u64>(out[k] / size);
    }
    return result;
}

bool fixture_example(const std::string& name, Outcome& out, std::optional<i64> theta = std::nullopt) {
    const ordered_json fx = cli_detail::load_fixture(g_fixtures_dir, name + ".json");
    ordered_json result;
    if (name == "example1") result = cli_detail::check_example1(fx);
    if (name == "example2") result = cli_detail::check_example2(fx);
    if (name == "example3") result = cli_detail::check_example3(fx);
    if (name == "example4") result = cli_detail::check_example4(fx, theta);
    if (!result.at("pass").get<bool>()) {
        out.require(false, "fixture mismatch: " + result.at("diffs").dump());
        return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// criteria
// --------------------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    fixture_example("example1", out);
    return out;
}

Outcome criterion2() {
    Outcome out;
    fixture_example("example2", out);
    return out;
}

Outcome criterion3() {
    Outcome out;
    fixture_example("example3", out);
    return out;
}

Outcome criterion4() {
    Outcome out;
    fixture_example("example4", out, 4);
    return out;
}

Outcome criterion5() {
    Outcome out;
    for (const auto& [p, q] : std::vector<std::pair<i64, i64>>{{7, 3}, {7, 19}, {13, 3}, {19, 5}}) {
        const Report r = lemma2_verify(QRSystem::make(p, q));
        out.require(r.checks.size() == 6 && r.all_pass(),
                    "idempotent identity failed at (" + std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    return out;
}

Outcome criterion6() {
    Outcome out;
    for (const auto& [p, q] : std::vector<std::pair<i64, i64>>{{7, 3}, {7, 19}, {19, 5}}) {
        const Report r = theorem8_verify(QRSystem::make(p, q));
        if (const Check* fail = r.first_failure()) {
            out.require(false, "(" + std::to_string(p) + ", " + std::to_string(q) + "): " + fail->name);
        }
        out.require(r.checks.size() == 140, "expected 10 checks per mask");
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    for (i64 q : {3, 19}) {
        const QRSystem sys = QRSystem::make(7, q);
        const Report r9 = theorem9_verify(sys);
        if (const Check* fail = r9.first_failure()) {
            out.require(false, "q=" + std::to_string(q) + ": " + fail->name);
        }
        const Report r11 = theorem11_verify(sys);
        if (const Check* fail = r11.first_failure()) {
            out.require(false, "q=" + std::to_string(q) + ": " + fail->name);
        }
    }

    // full enumeration cross-check at (7, 3): psi images of all 14 extended
    // codes, 7^8 codewords each, MacWilliams fixed point
    const QRSystem sys = QRSystem::make(7, 3);
    const PsiMatrix m(sys.field());
    for (const QRMask& mask : QRMask::all()) {
        const RLinearCode ext = extended_qr_code(sys, mask);
        const FpLinearCode image = psi_image_code(ext, m, sys.ids());
        out.require(image.dim() == 8 && image.length() == 16,
                    "psi image of mask " + mask.str() + " is not [16, 8]");
        const auto w = weight_enumerator(image);
        u64 total = 0;
        for (u64 c : w) total += c;
        out.require(total == 5764801, "weight enumerator does not sum to 7^8");
        out.require(macwilliams_transform(w, 7, image.dim()) == w,
                    "MacWilliams fixed point failed for mask " + mask.str());
        out.require(dual(image) == image, "psi image of mask " + mask.str() + " is not self-dual");
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    const QRSystem sys = QRSystem::make(19, 5);
    const Report r10 = theorem10_verify(sys);
    if (const Check* fail = r10.first_failure()) out.require(false, fail->name);
    const Report r12 = theorem12_verify(sys);
    if (const Check* fail = r12.first_failure()) out.require(false, fail->name);

    // corollary: psi images of each extended dual pair are dual codes of the
    // same dimension, and the pair is monomially equivalent over R, so both
    // images are formally self-dual
    const PsiMatrix m(sys.field());
    for (const QRMask& mask : QRMask::all()) {
        const FpLinearCode im = psi_image_code(extended_qr_code(sys, mask), m, sys.ids());
        const FpLinearCode im_c =
            psi_image_code(extended_qr_code(sys, mask.complement()), m, sys.ids());
        out.require(dual(im) == im_c && im.dim() == im_c.dim() && im.length() == 24,
                    "psi dual pair failed for mask " + mask.str());
    }
    return out;
}

Outcome criterion9() {
    Outcome out;

    // commutation of the Gray map with the shifts
    std::mt19937 rng(20240809);
    for (const auto& [p, n] : std::vector<std::pair<i64, int>>{{7, 5}, {7, 8}, {19, 3}}) {
        const PrimeField f(p);
        std::uniform_int_distribution<i64> coeff(0, p - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<RingElement> v(static_cast<size_t>(n));
            for (auto& r : v) r = {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
            out.require(phi(rho_shift(v, f), f) == sigma_shift(phi(v, f), f),
                        "phi did not intertwine the shifts");
        }
    }

    // ring CRT isomorphism, exhaustive at p = 7
    {
        const PrimeField f(7);
        const IdempotentSet ids(f);
        std::vector<bool> seen(2401, false);
        int distinct = 0;
        for (i64 a = 0; a < 7; ++a) {
            for (i64 b = 0; b < 7; ++b) {
                for (i64 c = 0; c < 7; ++c) {
                    for (i64 d = 0; d < 7; ++d) {
                        const RingElement r{a, b, c, d};
                        const auto x = ids.decompose(r);
                        out.require(ids.compose(x) == r, "compose(decompose) != id");
                        const size_t key = static_cast<size_t>(((x[0] * 7 + x[1]) * 7 + x[2]) * 7 + x[3]);
                        if (!seen[key]) {
                            seen[key] = true;
                            ++distinct;
                        }
                    }
                }
            }
        }
        out.require(distinct == 2401, "CRT map is not a bijection");
    }

    // closure oracle, the no-self-dual check, and the g*h identity over all
    // built codes
    {
        const PrimeField f(7);
        const IdempotentSet ids(f);
        for (int n : {2, 3, 5}) {
            const auto d1 = all_divisors(n, 1, f);
            const auto d2 = all_divisors(n, -1, f);
            const RPoly expected_product = RPoly::xn_minus(f, n, ring_lambda(f));
            int self_dual_count = 0;
            for (const auto& g1 : d1) {
                for (const auto& g2 : d2) {
                    for (const auto& g3 : d2) {
                        for (const auto& g4 : d2) {
                            const auto [code, cg] = consta_build({g1, g2, g3, g4}, n, ids);
                            out.require(cg.g_assembled * cg.h_assembled == expected_product,
                                        "g * h != x^n - (1 - 2u^3)");
                            if (n == 2 && is_self_dual(code)) ++self_dual_count;
                            if (code.size_exponent() > 6) continue;
                            FastMembership membership(code, ids);
                            std::vector<RingElement> shifted(static_cast<size_t>(n));
                            u64 violations = 0;
                            for_each_r_codeword(
                                code, ids, u64(1) << 24, [&](const std::vector<RingElement>& w) {
                                    for (int j = 0; j < n; ++j) {
                                        shifted[static_cast<size_t>((j + 1) % n)] = w[static_cast<size_t>(j)];
                                    }
                                    shifted[0] = ring_mul(ring_lambda(f), shifted[0], f);
                                    if (!membership.contains(shifted)) ++violations;
                                });
                            out.require(violations == 0, "rho closure violated at n = " + std::to_string(n));
                        }
                    }
                }
            }
            if (n == 2) out.require(self_dual_count == 0, "a self-dual constacyclic code exists at n = 2");
        }
    }
    return out;
}

struct Criterion {
    int index;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_fixtures_dir = argv[1];

    const std::vector<Criterion> criteria{
        {1, "worked example, p=7 n=5: factorizations, count, g(x), Gray image", 1.0, criterion1},
        {2, "worked example, p=7 n=8: count, g(x), Gray image, no cyclic equivalent", 1.0, criterion2},
        {3, "worked example, p=19 n=3^m: factor structure and counts (m = 1, 2)", 1.0, criterion3},
        {4, "worked example, p=7 q=19: residue sets, idempotents, duality, [80,40] self-dual image", 10.0,
         criterion4},
        {5, "idempotent identities at (7,3), (7,19), (13,3), (19,5)", 1.0, criterion5},
        {6, "QR mask algebra, all 14 masks at (7,3), (7,19), (19,5)", 30.0, criterion6},
        {7, "duality and extended self-duality at q = 3 (mod 4), with 7^8 enumeration at (7,3)", 60.0,
         criterion7},
        {8, "dual pairs and formal self-duality at (19,5)", 30.0, criterion8},
        {9, "property suites: shift commutation, CRT bijection, closure oracle, g*h identity", 120.0,
         criterion9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool within_budget = elapsed < c.budget_seconds;
        const bool pass = outcome.ok && within_budget;
        if (!pass) ++failures;
        std::printf("%s  criterion %d: %s  (%.2fs / budget %.0fs)\n", pass ? "PASS" : "FAIL", c.index,
                    c.name.c_str(), elapsed, c.budget_seconds);
        if (!outcome.ok) std::printf("      -> %s\n", outcome.detail.c_str());
        if (outcome.ok && !within_budget) std::printf("      -> exceeded the time budget\n");
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
