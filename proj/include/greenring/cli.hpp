#pragma once

/**
 * Command implementations behind the CLI: each returns the JSON report.
 * Output is deterministic: orderings come from the fixed class, block and
 * orbit orders of the underlying structures.
 */

#include "essential.hpp"
#include "group_spec.hpp"
#include "ideals.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace greenring::cli {

inline Json run_chartable(const std::string& group_spec, int order_cap) {
    GroupPtr G = parse_group_spec(group_spec, order_cap);
    CharTable T = char_table(G);
    Json rows = Json::array();
    for (auto& row : T.rows) {
        Json vals = Json::array();
        for (auto& v : row.values) vals.push_back(cyclo_json(v));
        rows.push_back(std::move(vals));
    }
    return Json{{"schema", 1},
                {"command", "chartable"},
                {"group", group_json(G)},
                {"degrees", T.degrees},
                {"rows", rows}};
}

inline Json run_classes(const std::string& field, const std::string& group_spec, int order_cap) {
    FieldSpec F = parse_field(field);
    GroupPtr G = parse_group_spec(group_spec, order_cap);
    auto P = f_classes(G, F);
    Json blocks = Json::array();
    for (int b = 0; b < P.num_blocks(); ++b)
        blocks.push_back(Json{{"representative_class", P.rep_class(b)},
                              {"classes", P.blocks[b]}});
    return Json{{"schema", 1},
                {"command", "classes"},
                {"F", F.str()},
                {"group", group_json(G)},
                {"count", P.num_blocks()},
                {"f_classes", blocks}};
}

inline Json run_omega(const std::string& kfield, const std::string& ffield,
                      const std::string& group_spec, int order_cap) {
    FieldSpec k = parse_field(kfield);
    FieldSpec F = parse_field(ffield);
    GroupPtr G = parse_group_spec(group_spec, order_cap);
    auto O = orbit_space(G, k, F);
    Json orbits = Json::array();
    for (auto& orb : O.orbits) orbits.push_back(orb);
    return Json{{"schema", 1},
                {"command", "omega"},
                {"k", k.str()},
                {"F", F.str()},
                {"group", group_json(G)},
                {"f_class_count", O.base.num_blocks()},
                {"count", O.num_orbits()},
                {"orbits", orbits}};
}

inline Json run_idempotents(const std::string& kfield, const std::string& ffield,
                            const std::string& group_spec, int order_cap) {
    FieldSpec k = parse_field(kfield);
    FieldSpec F = parse_field(ffield);
    GroupPtr G = parse_group_spec(group_spec, order_cap);
    auto O = orbit_space(G, k, F);
    Json idems = Json::array();
    for (int o = 0; o < O.num_orbits(); ++o) {
        auto e = idempotent_orbit(O, o);
        kclass_validate_or_throw(e, "orbit idempotent fails the model invariants");
        Json vals = Json::array();
        for (auto& v : e.values) vals.push_back(cyclo_json(v));
        idems.push_back(Json{{"orbit", o}, {"values", vals}});
    }
    return Json{{"schema", 1},
                {"command", "idempotents"},
                {"k", k.str()},
                {"F", F.str()},
                {"group", group_json(G)},
                {"count", O.num_orbits()},
                {"idempotents", idems}};
}

inline Json run_ideals(const std::string& kfield, const std::string& ffield,
                       const std::string& group_spec, const std::vector<int>& support,
                       const std::vector<std::string>& at_specs, int order_cap) {
    IdealContext ctx{parse_field(kfield), parse_field(ffield), parse_group_spec(group_spec, order_cap)};
    OrbitSpace base = context_omega(ctx);
    IdealSpec spec{ctx, {}};
    if (support.empty()) {
        for (int o = 0; o < base.num_orbits(); ++o) spec.support.insert(o);
    } else {
        for (int o : support) spec.support.insert(o);
    }
    Json evals = Json::array();
    std::vector<std::string> ats = at_specs.empty() ? std::vector<std::string>{"1"} : at_specs;
    for (auto& at : ats) {
        GroupPtr H = parse_group_spec(at, order_cap);
        auto ev = ideal_evaluation(spec, H);
        std::set<int> recovered;
        for (int o : ev.qualifying) recovered.insert(ev.orbit_pi2[o]);
        evals.push_back(Json{{"at", H->name},
                             {"omega_count", ev.omega.num_orbits()},
                             {"dimension", ev.dimension()},
                             {"basis_orbits", ev.qualifying},
                             {"recovered_support", recovered}});
    }
    return Json{{"schema", 1},
                {"command", "ideals"},
                {"k", ctx.k.str()},
                {"F", ctx.F.str()},
                {"group", group_json(ctx.G)},
                {"omega_count", base.num_orbits()},
                {"support", spec.support},
                {"evaluations", evals}};
}

inline Json run_essential(const std::string& kfield, const std::string& ffield,
                          const std::string& h_spec, const std::string& shift_spec,
                          int order_cap) {
    EssentialContext ctx;
    ctx.k = parse_field(kfield);
    ctx.F = parse_field(ffield);
    ctx.G = shift_spec.empty() ? trivial_group() : parse_group_spec(shift_spec, order_cap);
    GroupPtr H = parse_group_spec(h_spec, order_cap);
    auto r = essential_dim(ctx, H);
    return Json{{"schema", 1},
                {"command", "essential"},
                {"k", ctx.k.str()},
                {"F", ctx.F.str()},
                {"shift", ctx.G->name},
                {"group", group_json(H)},
                {"end_dim", r.end_dim},
                {"ideal_dim", r.ideal_dim},
                {"essential_dim", r.essential_dim}};
}

inline Json run_seeds(const std::string& group_spec, long order, int order_cap) {
    GroupPtr G = parse_group_spec(group_spec, order_cap);
    long count = seed_triplet_count(G, order);
    return Json{{"schema", 1},
                {"command", "seeds"},
                {"group", group_json(G)},
                {"order", order},
                {"prim", prim(order)},
                {"cyclic_subgroup_classes", cyclic_subgroups_up_to_conjugacy(G).size()},
                {"count", count}};
}

inline Json run_r3check(const std::string& k_spec, const std::string& h_spec,
                        const std::string& g_spec, int order_cap) {
    GroupPtr K = parse_group_spec(k_spec, order_cap);
    GroupPtr H = parse_group_spec(h_spec, order_cap);
    GroupPtr G = parse_group_spec(g_spec, order_cap);
    auto r = factor_through_trivial_rank(K, H, G);
    return Json{{"schema", 1},
                {"command", "r3check"},
                {"K", K->name},
                {"H", H->name},
                {"G", G->name},
                {"rank", r.rank},
                {"full_dim", r.full_dim},
                {"ok", r.rank == r.full_dim}};
}

// Runs one suite or all of them; `ok` in the report drives the exit code.
inline Json run_verify(const std::string& suite, int max_order) {
    std::vector<verify::Suite> suites;
    if (suite.empty() || suite == "all") {
        for (auto& name : verify::suite_names()) suites.push_back(verify::run_suite(name, max_order));
    } else {
        suites.push_back(verify::run_suite(suite, max_order));
    }
    bool ok = true;
    Json list = Json::array();
    for (auto& s : suites) {
        ok = ok && s.ok();
        list.push_back(suite_json(s));
    }
    return Json{{"schema", 1}, {"command", "verify"}, {"ok", ok}, {"suites", list}};
}

} // namespace greenring::cli
