#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "extfield.hpp"
#include "json_io.hpp"

namespace constaring {

/// Parsed command-line request. Parameter combinations are validated by the
/// individual commands before any computation runs.
struct RunConfig {
    std::string command;  // factor | consta | qr | paper-examples
    std::string sub;      // consta: build|count|dual|gray|equiv; qr: build|verify|extend|gray
    i64 p = 0;
    int n = 0;
    i64 q = 0;
    int sign = 1;
    std::array<std::vector<i64>, 4> gens{};
    std::array<bool, 4> has_gen{};
    std::optional<std::string> label;             // Q1..Q14 / S1..S14
    std::optional<std::vector<int>> mask;         // positions, e.g. {1, 3}
    char family = 'Q';
    std::optional<i64> theta;
    u64 cap = kDefaultEnumerationCap;
    std::string suite = "all";
    std::string fixtures_dir = "fixtures";
};

/// Exit code contract: 0 success, 1 verification/fixture mismatch, 2 usage or
/// precondition error.
struct CommandResult {
    int exit_code;
    ordered_json output;
};

namespace cli_detail {

inline ordered_json size_json(i64 p, int exponent) {
    return ordered_json{{"base", p}, {"exponent", exponent}};
}

inline std::array<FpPoly, 4> generators_from_config(const RunConfig& cfg, const PrimeField& f) {
    for (int i = 0; i < 4; ++i) {
        if (!cfg.has_gen[static_cast<size_t>(i)]) {
            throw Error("missing generator --g" + std::to_string(i + 1));
        }
    }
    return {FpPoly(f, cfg.gens[0]), FpPoly(f, cfg.gens[1]), FpPoly(f, cfg.gens[2]),
            FpPoly(f, cfg.gens[3])};
}

inline std::pair<QRFamily, QRMask> resolve_mask(const RunConfig& cfg) {
    if (cfg.label) {
        const std::string& s = *cfg.label;
        if (s.size() < 2 || (s[0] != 'Q' && s[0] != 'S')) {
            throw BadLabel("label must be Q1..Q14 or S1..S14, got '" + s + "'");
        }
        const QRFamily family = s[0] == 'Q' ? QRFamily::Q : QRFamily::S;
        int index = 0;
        try {
            index = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw BadLabel("label must be Q1..Q14 or S1..S14, got '" + s + "'");
        }
        return {family, label_to_mask(index, family)};
    }
    if (cfg.mask) {
        const QRFamily family = cfg.family == 'S' ? QRFamily::S : QRFamily::Q;
        return {family, QRMask::from_positions(*cfg.mask)};
    }
    throw BadLabel("a code must be selected with --label or --mask");
}

inline ordered_json base_output(const RunConfig& cfg) {
    ordered_json out;
    out["schema"] = kSchemaTag;
    out["command"] = cfg.sub.empty() ? cfg.command : cfg.command + " " + cfg.sub;
    return out;
}

// ---------------------------------------------------------------------------
// factor
// ---------------------------------------------------------------------------

inline CommandResult cmd_factor(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const auto factors = factor_xn_pm1(cfg.n, cfg.sign, f);
    const auto minus = factor_xn_pm1(cfg.n, 1, f);
    const auto plus = factor_xn_pm1(cfg.n, -1, f);
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    out["sign"] = cfg.sign;
    ordered_json fs = ordered_json::array();
    for (const auto& g : factors) fs.push_back(to_json(g));
    out["factors"] = std::move(fs);
    out["r1"] = minus.size();
    out["r2"] = plus.size();
    return {0, std::move(out)};
}

// ---------------------------------------------------------------------------
// consta subcommands
// ---------------------------------------------------------------------------

inline CommandResult cmd_consta_build(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const IdempotentSet ids(f);
    const auto gens = generators_from_config(cfg, f);
    const auto [code, cg] = consta_build(gens, cfg.n, ids);

    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    ordered_json comp_gens = ordered_json::array(), comp_cofs = ordered_json::array(),
                 comp_dims = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
        comp_gens.push_back(to_json(cg.g[static_cast<size_t>(i)]));
        comp_cofs.push_back(to_json(cg.h[static_cast<size_t>(i)]));
        comp_dims.push_back(code.comp(i + 1).dim());
    }
    out["component_generators"] = std::move(comp_gens);
    out["component_cofactors"] = std::move(comp_cofs);
    out["component_dimensions"] = std::move(comp_dims);
    out["g"] = to_json(cg.g_assembled, ids);
    out["h"] = to_json(cg.h_assembled, ids);
    out["size"] = size_json(cfg.p, code.size_exponent());
    out["lambda_constacyclic"] = is_lambda_constacyclic(code);
    out["code"] = to_json(code);
    return {0, std::move(out)};
}

inline CommandResult cmd_consta_count(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const ConstaCount count = count_constacyclic(cfg.n, f);
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    out["r1"] = count.r1;
    out["r2"] = count.r2;
    if (count.value) {
        out["count"] = *count.value;
    } else {
        out["count"] = count.count;
    }
    return {0, std::move(out)};
}

inline CommandResult cmd_consta_dual(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const IdempotentSet ids(f);
    const auto gens = generators_from_config(cfg, f);
    const auto [code, cg] = consta_build(gens, cfg.n, ids);
    const RLinearCode dual_code = dual(code);

    std::array<FpPoly, 4> dual_gens{FpPoly(f), FpPoly(f), FpPoly(f), FpPoly(f)};
    bool matches = true;
    for (int i = 0; i < 4; ++i) {
        dual_gens[static_cast<size_t>(i)] = reciprocal(cg.h[static_cast<size_t>(i)]);
        const int sign = i == 0 ? 1 : -1;
        if (!(FpLinearCode::cyclic_from_gpoly(dual_gens[static_cast<size_t>(i)], cfg.n, sign, f) ==
              dual_code.comp(i + 1))) {
            matches = false;
        }
    }

    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    ordered_json dg = ordered_json::array();
    for (const auto& g : dual_gens) dg.push_back(to_json(g));
    out["dual_generators"] = std::move(dg);
    out["h_perp"] = to_json(assemble(dual_gens, ids), ids);
    out["size"] = size_json(cfg.p, dual_code.size_exponent());
    out["matches_reciprocal_construction"] = matches;
    out["code"] = to_json(dual_code);
    return {0, std::move(out)};
}

inline CommandResult cmd_consta_gray(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const IdempotentSet ids(f);
    const auto gens = generators_from_config(cfg, f);
    const auto [code, cg] = consta_build(gens, cfg.n, ids);

    const FpPoly phi_g = phi_poly(cg.g_assembled, cfg.n);
    const FpLinearCode image = phi_image_code(code, ids);
    const FpPoly container_gen = cg.g[0] * poly_gcd({cg.g[1], cg.g[2], cg.g[3]});
    const FpLinearCode container = FpLinearCode::cyclic_from_gpoly(container_gen, 2 * cfg.n, 1, f);

    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    out["phi_g"] = to_json(phi_g);
    out["image_dimension"] = image.dim();
    out["container"] = to_json(container_gen);
    out["contained"] = image.subset_of(container);
    out["sigma_closed"] = is_sigma_closed(image);
    bool within_cap = image.dim() > 0;
    u64 words = 1;
    for (int i = 0; i < image.dim() && within_cap; ++i) {
        words *= static_cast<u64>(cfg.p);
        if (words > cfg.cap) within_cap = false;
    }
    if (within_cap) {
        out["image_min_distance"] = *min_distance(image, cfg.cap);
    } else {
        out["image_min_distance"] = nullptr;
    }
    out["image"] = to_json(image);
    return {0, std::move(out)};
}

inline CommandResult cmd_consta_equiv(const RunConfig& cfg) {
    const PrimeField f(cfg.p);
    const CyclicEquivalence eq = equivalent_to_cyclic(cfg.n, f);
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["n"] = cfg.n;
    out["equivalent"] = eq.equivalent;
    out["case"] = eq.odd_length ? "odd" : "even";
    if (eq.delta) {
        out["delta"] = *eq.delta;
    } else {
        out["delta"] = nullptr;
    }
    if (eq.odd_length) {
        out["substitution"] = "x -> (1-2*u^3)*x";
    } else {
        out["substitution"] = nullptr;
    }
    return {0, std::move(out)};
}

// ---------------------------------------------------------------------------
// qr subcommands
// ---------------------------------------------------------------------------

inline CommandResult cmd_qr_build(const RunConfig& cfg) {
    const QRSystem sys = QRSystem::make(cfg.p, cfg.q, cfg.theta);
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["q"] = cfg.q;
    out["theta"] = sys.theta();
    out["residues"] = sys.residues();
    out["non_residues"] = sys.non_residues();
    out["j1"] = to_json(sys.j1());
    out["j2"] = to_json(sys.j2());
    out["idempotents"] = ordered_json{{"e1", to_json(sys.e1())},
                                      {"e2", to_json(sys.e2())},
                                      {"et1", to_json(sys.et1())},
                                      {"et2", to_json(sys.et2())}};
    if (cfg.label || cfg.mask) {
        const auto [family, mask] = resolve_mask(cfg);
        const RLinearCode code = qr_code(sys, mask, family);
        ordered_json comp_gens = ordered_json::array();
        for (int i = 1; i <= 4; ++i) {
            const FpPoly& e = sys.idempotent(family, mask.contains(i));
            comp_gens.push_back(to_json(gen_poly_from_idempotent(e, static_cast<int>(cfg.q), sys.field())));
        }
        out["code"] = ordered_json{{"family", std::string(1, family_char(family))},
                                   {"label", label_name(mask, family)},
                                   {"mask", mask.positions()},
                                   {"component_generators", std::move(comp_gens)},
                                   {"size", size_json(cfg.p, code.size_exponent())},
                                   {"idempotent", to_json(qr_idempotent(sys, mask, family), sys.ids())},
                                   {"code", to_json(code)}};
    }
    return {0, std::move(out)};
}

inline CommandResult cmd_qr_verify(const RunConfig& cfg) {
    const QRSystem sys = QRSystem::make(cfg.p, cfg.q, cfg.theta);
    std::vector<std::string> suites;
    if (cfg.suite == "all") {
        suites = {"lemma2", "theorem8"};
        if (cfg.q % 4 == 3) {
            suites.push_back("theorem9");
            suites.push_back("theorem11");
        } else {
            suites.push_back("theorem10");
            suites.push_back("theorem12");
        }
    } else {
        suites = {cfg.suite};
    }

    ordered_json reports = ordered_json::array();
    bool all_pass = true;
    for (const std::string& name : suites) {
        Report r;
        if (name == "lemma2") {
            r = lemma2_verify(sys);
        } else if (name == "theorem8") {
            r = theorem8_verify(sys);
        } else if (name == "theorem9") {
            r = theorem9_verify(sys);
        } else if (name == "theorem10") {
            r = theorem10_verify(sys);
        } else if (name == "theorem11") {
            r = theorem11_verify(sys);
        } else if (name == "theorem12") {
            r = theorem12_verify(sys);
        } else {
            throw Error("unknown suite '" + name +
                        "' (expected lemma2|theorem8|theorem9|theorem10|theorem11|theorem12|all)");
        }
        all_pass = all_pass && r.all_pass();
        reports.push_back(to_json(r));
    }

    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["q"] = cfg.q;
    out["theta"] = sys.theta();
    out["suite"] = cfg.suite;
    out["all_pass"] = all_pass;
    out["reports"] = std::move(reports);
    return {all_pass ? 0 : 1, std::move(out)};
}

inline CommandResult cmd_qr_extend(const RunConfig& cfg) {
    const QRSystem sys = QRSystem::make(cfg.p, cfg.q, cfg.theta);
    const auto [family, mask] = resolve_mask(cfg);
    if (family != QRFamily::Q) {
        throw BadLabel("extended codes are labeled by the Q family; pass --label Q<i>");
    }
    const i64 border = border_for_mask(sys, mask);
    const RLinearCode ext = extended_qr_code(sys, mask);
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["q"] = cfg.q;
    out["label"] = label_name(mask, QRFamily::Q) + "_bar";
    out["mask"] = mask.positions();
    out["border"] = border;
    out["size"] = size_json(cfg.p, ext.size_exponent());
    out["self_dual"] = is_self_dual(ext);
    out["extended"] = to_json(ext);
    return {0, std::move(out)};
}

inline CommandResult cmd_qr_gray(const RunConfig& cfg) {
    const QRSystem sys = QRSystem::make(cfg.p, cfg.q, cfg.theta);
    const auto [family, mask] = resolve_mask(cfg);
    if (family != QRFamily::Q) {
        throw BadLabel("extended codes are labeled by the Q family; pass --label Q<i>");
    }
    const RLinearCode ext = extended_qr_code(sys, mask);
    const PsiMatrix m(sys.field());
    const FpLinearCode image = psi_image_code(ext, m, sys.ids());
    ordered_json out = base_output(cfg);
    out["p"] = cfg.p;
    out["q"] = cfg.q;
    out["label"] = label_name(mask, QRFamily::Q) + "_bar";
    out["mask"] = mask.positions();
    out["border"] = border_for_mask(sys, mask);
    out["length"] = image.length();
    out["dimension"] = image.dim();
    out["self_dual"] = dual(image) == image;
    out["image"] = to_json(image);
    return {0, std::move(out)};
}

// ---------------------------------------------------------------------------
// paper-examples
// ---------------------------------------------------------------------------

inline ordered_json load_fixture(const std::string& dir, const std::string& name) {
    const std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file '" + path + "'");
    ordered_json j;
    in >> j;
    return j;
}

struct DiffCollector {
    ordered_json diffs = ordered_json::array();

    void expect(const std::string& field, const ordered_json& expected, const ordered_json& actual) {
        if (expected != actual) {
            diffs.push_back(ordered_json{{"field", field}, {"expected", expected}, {"actual", actual}});
        }
    }

    bool pass() const { return diffs.empty(); }
};

inline ordered_json factor_list_json(const std::vector<FpPoly>& fs) {
    ordered_json out = ordered_json::array();
    for (const auto& g : fs) out.push_back(to_json(g));
    return out;
}

inline ordered_json rpoly_basis_json(const RPoly& g) {
    ordered_json out = ordered_json::array();
    for (const RingElement& c : g.coeffs()) out.push_back(to_json(c));
    return out;
}

inline ordered_json check_example1(const ordered_json& fx) {
    const PrimeField f(fx.at("p").get<i64>());
    const IdempotentSet ids(f);
    const int n = fx.at("n").get<int>();
    DiffCollector d;

    d.expect("factors_minus", fx.at("factors_minus"), factor_list_json(factor_xn_pm1(n, 1, f)));
    d.expect("factors_plus", fx.at("factors_plus"), factor_list_json(factor_xn_pm1(n, -1, f)));
    const ConstaCount count = count_constacyclic(n, f);
    d.expect("constacyclic_count", fx.at("constacyclic_count"), ordered_json(*count.value));

    const std::array<FpPoly, 4> gens{
        fppoly_from_json(fx.at("g1"), f), fppoly_from_json(fx.at("g2"), f),
        fppoly_from_json(fx.at("g3"), f), fppoly_from_json(fx.at("g4"), f)};
    const auto [code, cg] = consta_build(gens, n, ids);
    d.expect("g_assembled", fx.at("g_assembled"), rpoly_basis_json(cg.g_assembled));
    d.expect("phi_g", fx.at("phi_g"), to_json(phi_poly(cg.g_assembled, n)));

    const FpLinearCode image = phi_image_code(code, ids);
    const FpPoly container_gen = fppoly_from_json(fx.at("gray_container"), f);
    const auto container = FpLinearCode::cyclic_from_gpoly(container_gen, 2 * n, 1, f);
    d.expect("gray_contained", true, image.subset_of(container));
    d.expect("gray_sigma_closed", true, is_sigma_closed(image));
    const auto dist = min_distance(image);
    d.expect("gray_min_distance_at_least",
             ordered_json{{"bound", fx.at("gray_min_distance_at_least")}, {"holds", true}},
             ordered_json{{"bound", fx.at("gray_min_distance_at_least")},
                          {"holds", dist.has_value() &&
                                        *dist >= fx.at("gray_min_distance_at_least").get<i64>()}});

    return ordered_json{{"example", "example1"}, {"pass", d.pass()}, {"diffs", d.diffs}};
}

inline ordered_json check_example2(const ordered_json& fx) {
    const PrimeField f(fx.at("p").get<i64>());
    const IdempotentSet ids(f);
    const int n = fx.at("n").get<int>();
    DiffCollector d;

    d.expect("factors_minus", fx.at("factors_minus"), factor_list_json(factor_xn_pm1(n, 1, f)));
    d.expect("factors_plus", fx.at("factors_plus"), factor_list_json(factor_xn_pm1(n, -1, f)));
    const ConstaCount count = count_constacyclic(n, f);
    d.expect("constacyclic_count", fx.at("constacyclic_count"), ordered_json(*count.value));

    const std::array<FpPoly, 4> gens{
        fppoly_from_json(fx.at("g1"), f), fppoly_from_json(fx.at("g2"), f),
        fppoly_from_json(fx.at("g3"), f), fppoly_from_json(fx.at("g4"), f)};
    const auto [code, cg] = consta_build(gens, n, ids);
    d.expect("g_assembled", fx.at("g_assembled"), rpoly_basis_json(cg.g_assembled));
    d.expect("size_exponent", fx.at("size_exponent"), ordered_json(code.size_exponent()));
    d.expect("phi_g", fx.at("phi_g"), to_json(phi_poly(cg.g_assembled, n)));
    d.expect("equivalent_to_cyclic", fx.at("equivalent_to_cyclic"),
             ordered_json(equivalent_to_cyclic(n, f).equivalent));

    const FpLinearCode image = phi_image_code(code, ids);
    const FpPoly container_gen = fppoly_from_json(fx.at("gray_container"), f);
    const auto container = FpLinearCode::cyclic_from_gpoly(container_gen, 2 * n, 1, f);
    d.expect("gray_contained", true, image.subset_of(container));
    d.expect("gray_sigma_closed", true, is_sigma_closed(image));

    return ordered_json{{"example", "example2"}, {"pass", d.pass()}, {"diffs", d.diffs}};
}

inline ordered_json check_example3(const ordered_json& fx) {
    const PrimeField f(fx.at("p").get<i64>());
    DiffCollector d;
    for (const std::string block : {"m1", "m2"}) {
        const ordered_json& b = fx.at(block);
        const int n = b.at("n").get<int>();
        d.expect(block + ".factors_minus", b.at("factors_minus"),
                 factor_list_json(factor_xn_pm1(n, 1, f)));
        d.expect(block + ".factors_plus", b.at("factors_plus"),
                 factor_list_json(factor_xn_pm1(n, -1, f)));
        const ConstaCount count = count_constacyclic(n, f);
        d.expect(block + ".r1", b.at("r1"), ordered_json(count.r1));
        d.expect(block + ".r2", b.at("r2"), ordered_json(count.r2));
        d.expect(block + ".count", b.at("count"), ordered_json(*count.value));
        d.expect(block + ".equivalent_to_cyclic", true, equivalent_to_cyclic(n, f).equivalent);
    }
    return ordered_json{{"example", "example3"}, {"pass", d.pass()}, {"diffs", d.diffs}};
}

inline FpPoly j_form_poly(const ordered_json& spec, const QRSystem& sys) {
    return FpPoly::constant(sys.field(), spec.at("c0").get<i64>()) +
           sys.j1() * spec.at("j1").get<i64>() + sys.j2() * spec.at("j2").get<i64>();
}

inline ordered_json check_example4(const ordered_json& fx, std::optional<i64> theta_override) {
    const i64 p = fx.at("p").get<i64>();
    const i64 q = fx.at("q").get<i64>();
    const i64 theta = theta_override.value_or(fx.at("theta").get<i64>());
    const QRSystem sys = QRSystem::make(p, q, theta);
    const PrimeField& f = sys.field();
    DiffCollector d;

    d.expect("residues", fx.at("residues"), ordered_json(sys.residues()));
    d.expect("non_residues", fx.at("non_residues"), ordered_json(sys.non_residues()));
    d.expect("theta_squared", fx.at("theta_squared"), ordered_json(f.mul(sys.theta(), sys.theta())));

    const FpPoly e1_expected = j_form_poly(fx.at("e1"), sys);
    const FpPoly e2_expected = j_form_poly(fx.at("e2"), sys);
    d.expect("e1", to_json(e1_expected), to_json(sys.e1()));
    d.expect("e2", to_json(e2_expected), to_json(sys.e2()));
    const bool label_swap = sys.e1() == e2_expected && sys.e2() == e1_expected;

    // Q1 and S1 generators in the ring form a + d u^3
    const RPoly q1_idem = qr_idempotent(sys, label_to_mask(1, QRFamily::Q), QRFamily::Q);
    const RPoly s1_idem = qr_idempotent(sys, label_to_mask(1, QRFamily::S), QRFamily::S);
    const FpPoly q1_a = j_form_poly(fx.at("q1_idempotent").at("a"), sys);
    const FpPoly q1_d = j_form_poly(fx.at("q1_idempotent").at("d"), sys);
    const FpPoly s1_a = j_form_poly(fx.at("s1_idempotent").at("a"), sys);
    const FpPoly s1_d = j_form_poly(fx.at("s1_idempotent").at("d"), sys);
    std::vector<RingElement> q1_expected(static_cast<size_t>(q)), s1_expected(static_cast<size_t>(q));
    for (int k = 0; k < q; ++k) {
        q1_expected[static_cast<size_t>(k)] = RingElement{q1_a[k], 0, 0, q1_d[k]};
        s1_expected[static_cast<size_t>(k)] = RingElement{s1_a[k], 0, 0, s1_d[k]};
    }
    d.expect("q1_idempotent", rpoly_basis_json(RPoly(f, std::move(q1_expected))),
             rpoly_basis_json(q1_idem));
    d.expect("s1_idempotent", rpoly_basis_json(RPoly(f, std::move(s1_expected))),
             rpoly_basis_json(s1_idem));

    const QRMask mask1 = label_to_mask(1, QRFamily::Q);
    const RLinearCode q1 = qr_code(sys, mask1, QRFamily::Q);
    const RLinearCode s1 = qr_code(sys, mask1, QRFamily::S);
    d.expect("q1_dual_is_s1", fx.at("q1_dual_is_s1"), ordered_json(dual(q1) == s1));
    bool s1_self_orth = true;
    for (int i = 1; i <= 4; ++i) {
        if (!s1.comp(i).subset_of(dual(s1.comp(i)))) s1_self_orth = false;
    }
    d.expect("s1_self_orthogonal", fx.at("s1_self_orthogonal"), ordered_json(s1_self_orth));

    const RLinearCode ext = extended_qr_code(sys, mask1);
    const PsiMatrix m(f);
    const FpLinearCode image = psi_image_code(ext, m, sys.ids());
    const ordered_json& psi_fx = fx.at("psi_extended_q1");
    d.expect("psi_extended_q1.length", psi_fx.at("length"), ordered_json(image.length()));
    d.expect("psi_extended_q1.dimension", psi_fx.at("dimension"), ordered_json(image.dim()));
    d.expect("psi_extended_q1.self_dual", psi_fx.at("self_dual"), ordered_json(dual(image) == image));

    ordered_json out{{"example", "example4"}, {"pass", d.pass()}, {"diffs", d.diffs}};
    out["theta"] = sys.theta();
    if (label_swap) out["label_swap"] = true;
    return out;
}

inline CommandResult cmd_paper_examples(const RunConfig& cfg) {
    ordered_json results = ordered_json::array();
    results.push_back(check_example1(load_fixture(cfg.fixtures_dir, "example1.json")));
    results.push_back(check_example2(load_fixture(cfg.fixtures_dir, "example2.json")));
    results.push_back(check_example3(load_fixture(cfg.fixtures_dir, "example3.json")));
    results.push_back(check_example4(load_fixture(cfg.fixtures_dir, "example4.json"), cfg.theta));

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.at("pass").get<bool>();
    ordered_json out = base_output(cfg);
    out["fixtures"] = cfg.fixtures_dir;
    out["all_pass"] = all_pass;
    out["results"] = std::move(results);
    return {all_pass ? 0 : 1, std::move(out)};
}

}  // namespace cli_detail

/// Runs one parsed command. Library precondition violations surface as exit
/// code 2 with a diagnostic object; verification failures as exit code 1.
inline CommandResult run_command(const RunConfig& cfg) {
    using namespace cli_detail;
    try {
        if (cfg.command == "factor") return cmd_factor(cfg);
        if (cfg.command == "consta") {
            if (cfg.sub == "build") return cmd_consta_build(cfg);
            if (cfg.sub == "count") return cmd_consta_count(cfg);
            if (cfg.sub == "dual") return cmd_consta_dual(cfg);
            if (cfg.sub == "gray") return cmd_consta_gray(cfg);
            if (cfg.sub == "equiv") return cmd_consta_equiv(cfg);
            throw Error("unknown consta subcommand '" + cfg.sub + "'");
        }
        if (cfg.command == "qr") {
            if (cfg.sub == "build") return cmd_qr_build(cfg);
            if (cfg.sub == "verify") return cmd_qr_verify(cfg);
            if (cfg.sub == "extend") return cmd_qr_extend(cfg);
            if (cfg.sub == "gray") return cmd_qr_gray(cfg);
            throw Error("unknown qr subcommand '" + cfg.sub + "'");
        }
        if (cfg.command == "paper-examples") return cmd_paper_examples(cfg);
        throw Error("unknown command '" + cfg.command + "'");
    } catch (const Error& e) {
        ordered_json out;
        out["schema"] = kSchemaTag;
        out["error"] = ordered_json{{"kind", e.kind()}, {"message", e.what()}};
        return {2, std::move(out)};
    }
}

}  // namespace constaring
