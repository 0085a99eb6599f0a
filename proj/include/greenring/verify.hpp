#pragma once

/**
 * Verification suites: every structural identity the engine is contractually
 * bound to satisfies gets an exact check here, over pinned fixture grids.
 * The acceptance binary runs them one criterion per line; the CLI exposes
 * them under `verify --suite <name>`.
 */

#include <random>
#include <sstream>

#include "biset.hpp"
#include "char_table.hpp"
#include "essential.hpp"
#include "ideals.hpp"
#include "linalg.hpp"
#include "rep_functor.hpp"
#include "shifted.hpp"

namespace greenring::verify {

struct Case {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string name;
    std::vector<Case> cases;

    void add(std::string label, bool pass, std::string detail = "") {
        cases.push_back({std::move(label), pass, std::move(detail)});
    }
    bool ok() const {
        for (auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int passed() const {
        int n = 0;
        for (auto& c : cases) n += c.pass ? 1 : 0;
        return n;
    }
};

namespace detail {

inline std::vector<GroupPtr> chartable_fixtures(int max_order) {
    std::vector<GroupPtr> out;
    for (int n = 1; n <= 12; ++n) out.push_back(cyclic_group(n));
    out.push_back(symmetric_group(3));
    out.push_back(dihedral_group(4));
    out.push_back(quaternion_group());
    out.push_back(alternating_group(4));
    out.push_back(symmetric_group(4));
    out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    if (max_order > 0) {
        std::vector<GroupPtr> kept;
        for (auto& g : out)
            if (g->n <= max_order) kept.push_back(g);
        return kept;
    }
    return out;
}

inline std::vector<GroupPtr> order_le_8_groups() {
    return {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
            direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(5),
            cyclic_group(6), symmetric_group(3), cyclic_group(7), cyclic_group(8),
            direct_product(cyclic_group(4), cyclic_group(2)),
            direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
            dihedral_group(4), quaternion_group()};
}

inline ClassFunction random_virtual_character(const CharTable& T, std::mt19937_64& rng) {
    ClassFunction f = constant_function(T.group, Cyclo(0));
    for (auto& row : T.rows) {
        long num = static_cast<long>(rng() % 7) - 3;
        if (num == 0) continue;
        f = f + scale(Cyclo(Rat(num, 1 + static_cast<long>(rng() % 2))), row);
    }
    return f;
}

inline Biset random_transitive_biset(const GroupPtr& H, const GroupPtr& G, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> gens;
    int count = static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i)
        gens.emplace_back(static_cast<int>(rng() % H->n), static_cast<int>(rng() % G->n));
    return biset_from_subgroup(H, G, gens);
}

struct IdealLattice {
    GroupPtr one = trivial_group();
    GroupPtr c2 = cyclic_group(2);
    GroupPtr c3 = cyclic_group(3);
    GroupPtr c4 = cyclic_group(4);
    GroupPtr s3 = symmetric_group(3);

    std::vector<GroupPtr> members() const { return {one, c2, c3, c4, s3}; }

    std::vector<Biset> basic_bisets() const {
        std::vector<Biset> out;
        auto add_ind_res = [&](const GroupPtr& K, const std::vector<int>& gens) {
            auto sub = subgroup_as_group(subgroup_from_generators(K, gens));
            out.push_back(induction_biset(K, sub));
            out.push_back(restriction_biset(K, sub));
        };
        add_ind_res(c2, {});
        add_ind_res(c3, {});
        add_ind_res(c4, {});
        add_ind_res(s3, {});
        add_ind_res(c4, {2});
        int gen2 = -1, gen3 = -1;
        for (int g = 0; g < 6; ++g) {
            if (gen2 < 0 && s3->elem_order[g] == 2) gen2 = g;
            if (gen3 < 0 && s3->elem_order[g] == 3) gen3 = g;
        }
        add_ind_res(s3, {gen2});
        add_ind_res(s3, {gen3});
        auto qc4 = quotient(c4, subgroup_from_generators(c4, {2}));
        out.push_back(inflation_biset(c4, qc4));
        out.push_back(deflation_biset(c4, qc4));
        auto qs3 = quotient(s3, subgroup_from_generators(s3, {gen3}));
        out.push_back(inflation_biset(s3, qs3));
        out.push_back(deflation_biset(s3, qs3));
        out.push_back(identity_biset(c4));
        out.push_back(iso_biset(c3, c3, {0, 2, 1}));
        return out;
    }
};

} // namespace detail

// Criterion 1: exact character-table identities on the fixture set.
inline Suite chartable_suite(int max_order = 0) {
    Suite s{"chartable", {}};
    for (auto& G : detail::chartable_fixtures(max_order)) {
        CharTable T;
        try {
            T = char_table(G);
        } catch (const std::exception& e) {
            s.add(G->name, false, e.what());
            continue;
        }
        bool row_orth = true, col_orth = true, degsq = true, equivariant = true;
        int r = T.num_rows();
        for (int i = 0; i < r && row_orth; ++i)
            for (int j = i; j < r; ++j)
                if (inner_product(T.rows[i], T.rows[j]) != Cyclo(i == j ? 1 : 0)) {
                    row_orth = false;
                    break;
                }
        for (int c = 0; c < r && col_orth; ++c)
            for (int c2 = c; c2 < r; ++c2) {
                Cyclo acc(0);
                for (int i = 0; i < r; ++i)
                    acc += T.rows[i].values[c] * T.rows[i].values[c2].conjugate();
                if (acc != (c == c2 ? Cyclo(Rat(G->centralizer_order[c])) : Cyclo(0))) {
                    col_orth = false;
                    break;
                }
            }
        long total = 0;
        for (long d : T.degrees) total += d * d;
        degsq = total == G->n;
        for (auto& row : T.rows)
            for (int c = 0; c < r && equivariant; ++c)
                for (long j : units_mod(G->exponent))
                    if (row.values[G->class_power(c, j)] != row.values[c].galois(j)) {
                        equivariant = false;
                        break;
                    }
        bool pass = row_orth && col_orth && degsq && equivariant;
        s.add(G->name, pass,
              pass ? "" : std::string(!row_orth ? "row orthogonality " : "") +
                          (!col_orth ? "column orthogonality " : "") +
                          (!degsq ? "degree sum " : "") + (!equivariant ? "galois equivariance" : ""));
    }
    return s;
}

// Criterion 2: orbit idempotents over the (G, k, F) grid.
inline Suite idempotent_suite(int max_order = 0) {
    Suite s{"idempotents", {}};
    std::vector<GroupPtr> groups{cyclic_group(3), cyclic_group(4), cyclic_group(6),
                                 symmetric_group(3), dihedral_group(4), quaternion_group()};
    std::vector<FieldSpec> ks{FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::full()};
    std::vector<FieldSpec> fs{FieldSpec::rationals(), FieldSpec::full()};
    for (auto& G : groups) {
        if (max_order > 0 && G->n > max_order) continue;
        // the point-idempotent formula against the class indicator
        bool points_ok = true;
        std::string detail;
        try {
            auto T = char_table(G);
            for (int c = 0; c < G->num_classes(); ++c)
                if (idempotent_point(T, c) != class_indicator(G, c)) points_ok = false;
        } catch (const std::exception& e) {
            points_ok = false;
            detail = e.what();
        }
        s.add("point idempotents on " + G->name, points_ok, detail);
        for (auto& k : ks)
            for (auto& F : fs) {
                if (!field_contained(k, F)) continue;
                std::string label = G->name + " over k=" + k.str() + ", F=" + F.str();
                try {
                    auto O = orbit_space(G, k, F);
                    std::vector<KClassFunction> es;
                    for (int o = 0; o < O.num_orbits(); ++o) es.push_back(idempotent_orbit(O, o));
                    bool pass = true;
                    ClassFunction sum = constant_function(G, Cyclo(0));
                    for (size_t i = 0; i < es.size() && pass; ++i) {
                        if (!kclass_valid(es[i])) pass = false;
                        for (size_t j = 0; j < es.size() && pass; ++j) {
                            ClassFunction prod = es[i].fn() * es[j].fn();
                            if (i == j ? !(prod == es[i].fn()) : !prod.is_zero()) pass = false;
                        }
                        sum = sum + es[i].fn();
                    }
                    if (!(sum == constant_function(G, Cyclo(1)))) pass = false;
                    s.add(label, pass);
                } catch (const std::exception& e) {
                    s.add(label, false, e.what());
                }
            }
    }
    return s;
}

// Criterion 3: sizes of the orbit spaces.
inline Suite omega_suite(int max_order = 0) {
    Suite s{"omega", {}};
    for (int n = 1; n <= 12; ++n) {
        if (max_order > 0 && n > max_order) continue;
        int got = orbit_space(cyclic_group(n), FieldSpec::rationals(), FieldSpec::rationals()).num_orbits();
        int want = static_cast<int>(divisors(n).size());
        s.add("|Omega(Q,Q,C_" + std::to_string(n) + ")| = " + std::to_string(want), got == want,
              got == want ? "" : "got " + std::to_string(got));
    }
    for (auto& G : detail::chartable_fixtures(max_order)) {
        int got = orbit_space(G, FieldSpec::full(), FieldSpec::full()).num_orbits();
        s.add("|Omega(Qfull,Qfull," + G->name + ")| = class count", got == G->num_classes(),
              got == G->num_classes() ? "" : "got " + std::to_string(got));
    }
    int mixed = orbit_space(cyclic_group(3), FieldSpec::rationals(), FieldSpec::full()).num_orbits();
    s.add("|Omega(Q,Qfull,C_3)| = 2", mixed == 2, mixed == 2 ? "" : "got " + std::to_string(mixed));
    return s;
}

// Criterion 4: the lattice isomorphism and closure under basic operations.
inline Suite ideal_suite() {
    Suite s{"ideals", {}};
    detail::IdealLattice lat;
    auto bisets = lat.basic_bisets();
    std::vector<IdealContext> contexts{
        {FieldSpec::full(), FieldSpec::full(), cyclic_group(2)},
        {FieldSpec::rationals(), FieldSpec::full(), cyclic_group(3)},
        {FieldSpec::rationals(), FieldSpec::rationals(), symmetric_group(3)},
    };
    for (auto& ctx : contexts) {
        std::string cname = "(" + ctx.k.str() + "," + ctx.F.str() + "," + ctx.G->name + ")";
        OrbitSpace base = context_omega(ctx);
        bool round_trip = true;
        for (int mask = 0; mask < (1 << base.num_orbits()); ++mask) {
            std::set<int> support;
            for (int i = 0; i < base.num_orbits(); ++i)
                if (mask & (1 << i)) support.insert(i);
            for (auto& H : lat.members()) {
                auto ev = ideal_evaluation({ctx, support}, H);
                std::set<int> recovered;
                for (int o : ev.qualifying) recovered.insert(ev.orbit_pi2[o]);
                if (recovered != support) { round_trip = false; break; }
            }
            if (!round_trip) break;
        }
        s.add("round trip over " + cname, round_trip);

        bool closure = true, valid = true;
        for (auto& alpha : bisets) {
            Tensor2 HG = tensor2(alpha.right, ctx.G);
            Tensor2 KG = tensor2(alpha.left, ctx.G);
            OrbitSpace omega_h = orbit_space(HG.ab, ctx.k, ctx.F);
            auto pi2_h = orbit_second_projection(omega_h, HG, base);
            Biset alphaG = biset_product(alpha, identity_biset(ctx.G), KG.ab, HG.ab);
            for (int o = 0; o < omega_h.num_orbits(); ++o) {
                KClassFunction moved = act_k(alphaG, idempotent_orbit(omega_h, o));
                if (!kclass_valid(moved)) valid = false;
                for (int mask = 0; mask < (1 << base.num_orbits()); ++mask) {
                    std::set<int> support;
                    for (int i = 0; i < base.num_orbits(); ++i)
                        if (mask & (1 << i)) support.insert(i);
                    if (!support.count(pi2_h[o])) continue;
                    auto evK = ideal_evaluation({ctx, support}, alpha.left);
                    if (!in_ideal_span(evK, moved)) closure = false;
                }
            }
        }
        s.add("model stability under basic operations over " + cname, valid);
        s.add("closure of evaluations over " + cname, closure);
    }
    return s;
}

// Criterion 5: functoriality of the averaging action under composition.
inline Suite functoriality_suite(int num_pairs = 100, std::uint64_t seed = 0x5EED5) {
    Suite s{"functoriality", {}};
    std::mt19937_64 rng(seed);
    auto pool = detail::order_le_8_groups();
    std::map<const FiniteGroup*, CharTable> tables;
    for (auto& G : pool) tables.emplace(G.get(), char_table(G));
    int failures = 0;
    for (int trial = 0; trial < num_pairs; ++trial) {
        auto K = pool[rng() % pool.size()];
        auto H = pool[rng() % pool.size()];
        auto G = pool[rng() % pool.size()];
        Biset Y = detail::random_transitive_biset(K, H, rng);
        Biset X = detail::random_transitive_biset(H, G, rng);
        Biset YX = compose(Y, X);
        const auto& T = tables.at(G.get());
        for (int pick = 0; pick < 2; ++pick) {
            const auto& chi = T.rows[rng() % T.rows.size()];
            if (!(act(YX, chi) == act(Y, act(X, chi)))) ++failures;
        }
    }
    s.add("act(Y o X) = act(Y) o act(X) on " + std::to_string(num_pairs) + " random pairs",
          failures == 0, failures ? std::to_string(failures) + " failures" : "");
    return s;
}

// Criterion 6: kernel formulas against the definitional biset routes.
inline Suite kernel_oracle_suite(int num_cases = 50, std::uint64_t seed = 0x0AC1E) {
    Suite s{"shifted", {}};
    std::mt19937_64 rng(seed);
    std::vector<GroupPtr> pool{trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                               direct_product(cyclic_group(2), cyclic_group(2))};
    std::map<const FiniteGroup*, CharTable> tables;
    int prod_failures = 0;
    auto table_of = [&](const GroupPtr& G) -> const CharTable& {
        auto it = tables.find(G.get());
        if (it == tables.end()) it = tables.emplace(G.get(), char_table(G)).first;
        return it->second;
    };
    for (int trial = 0; trial < num_cases; ++trial) {
        auto K = pool[rng() % pool.size()];
        auto H = pool[rng() % pool.size()];
        auto G = pool[rng() % pool.size()];
        Tensor2 KG = tensor2(K, G), HG = tensor2(H, G);
        Tensor3 KHG = tensor3(K, H, G);
        ClassFunction a = detail::random_virtual_character(table_of(KG.ab), rng);
        ClassFunction b = detail::random_virtual_character(table_of(HG.ab), rng);
        if (!(shifted_product(a, KG, b, HG, KHG) == shifted_product_oracle(a, KG, b, HG, KHG)))
            ++prod_failures;
    }
    s.add("shifted product kernel = definitional route on " + std::to_string(num_cases) + " cases",
          prod_failures == 0, prod_failures ? std::to_string(prod_failures) + " failures" : "");
    int comp_failures = 0;
    for (int trial = 0; trial < num_cases; ++trial) {
        auto L = pool[rng() % pool.size()];
        auto K = pool[rng() % pool.size()];
        auto H = pool[rng() % pool.size()];
        auto G = pool[rng() % pool.size()];
        Tensor3 LKG = tensor3(L, K, G), KHG = tensor3(K, H, G), LHG = tensor3(L, H, G);
        ClassFunction beta = detail::random_virtual_character(table_of(LKG.abc), rng);
        ClassFunction alpha = detail::random_virtual_character(table_of(KHG.abc), rng);
        if (!(shifted_compose(beta, LKG, alpha, KHG, LHG) ==
              shifted_compose_oracle(beta, LKG, alpha, KHG, LHG)))
            ++comp_failures;
    }
    s.add("shifted composition kernel = definitional route on " + std::to_string(num_cases) + " cases",
          comp_failures == 0, comp_failures ? std::to_string(comp_failures) + " failures" : "");
    return s;
}

// Criterion 7: essential dimensions against the primitive-character counts.
inline Suite essential_suite(int max_n = 8) {
    Suite s{"essential", {}};
    EssentialContext ctx;
    for (int n = 1; n <= max_n; ++n) {
        auto r = essential_dim(ctx, cyclic_group(n));
        long want = prim(n);
        s.add("essential dim of C_" + std::to_string(n) + " = " + std::to_string(want),
              r.essential_dim == want,
              r.essential_dim == want ? "" : "got " + std::to_string(r.essential_dim));
    }
    std::vector<GroupPtr> noncyclic{dihedral_group(4), quaternion_group(),
                                    direct_product(cyclic_group(2), cyclic_group(2)),
                                    symmetric_group(3)};
    for (auto& H : noncyclic) {
        auto r = essential_dim(ctx, H);
        s.add("essential dim of " + H->name + " = 0", r.essential_dim == 0,
              r.essential_dim == 0 ? "" : "got " + std::to_string(r.essential_dim));
    }
    return s;
}

// Criterion 8: the product form of the shifted essential algebra.
inline Suite essalg_product_suite() {
    Suite s{"essalg-product", {}};
    struct CasePair { int h; int g; };
    for (auto [h, g] : std::vector<CasePair>{{3, 2}, {4, 3}}) {
        EssentialContext plain;
        EssentialContext shifted;
        shifted.G = cyclic_group(g);
        long base = essential_dim(plain, cyclic_group(h)).essential_dim;
        long moved = essential_dim(shifted, cyclic_group(h)).essential_dim;
        long classes = static_cast<long>(cyclic_subgroups_up_to_conjugacy(shifted.G).size());
        s.add("essential(C_" + std::to_string(h) + " shift C_" + std::to_string(g) + ") = " +
                  std::to_string(base) + " x " + std::to_string(classes),
              moved == base * classes,
              moved == base * classes ? "" : "got " + std::to_string(moved));
    }
    return s;
}

// Criterion 9: hom-sets factor through the trivial group at full rank.
inline Suite factor_rank_suite() {
    Suite s{"factor-rank", {}};
    std::vector<GroupPtr> pool{trivial_group(), cyclic_group(2), cyclic_group(3)};
    for (auto& K : pool)
        for (auto& H : pool)
            for (auto& G : pool) {
                auto r = factor_through_trivial_rank(K, H, G);
                s.add("rank through 1 on (" + K->name + "," + H->name + "," + G->name + ")",
                      r.rank == r.full_dim,
                      r.rank == r.full_dim ? "" : "rank " + std::to_string(r.rank) +
                                                      " of " + std::to_string(r.full_dim));
            }
    auto r = factor_through_trivial_rank(cyclic_group(2), cyclic_group(2), symmetric_group(3));
    s.add("rank through 1 on (C_2,C_2,S_3)", r.rank == r.full_dim,
          r.rank == r.full_dim ? "" : "rank " + std::to_string(r.rank) + " of " + std::to_string(r.full_dim));
    return s;
}

// Criterion 10: Frobenius identities and the structural lemmas.
inline Suite green_axioms_suite() {
    Suite s{"green-axioms", {}};
    // Frobenius identities over subgroup inclusions
    {
        auto s3 = symmetric_group(3);
        int gen2 = -1, gen3 = -1;
        for (int g = 0; g < 6; ++g) {
            if (gen2 < 0 && s3->elem_order[g] == 2) gen2 = g;
            if (gen3 < 0 && s3->elem_order[g] == 3) gen3 = g;
        }
        struct Inc { GroupPtr K; std::vector<int> gens; };
        std::vector<Inc> incs{{cyclic_group(4), {2}}, {s3, {gen3}}, {s3, {gen2}},
                              {dihedral_group(4), {2}}, {quaternion_group(), {1}}};
        bool pass = true;
        for (auto& [K, gens] : incs) {
            auto sub = subgroup_as_group(subgroup_from_generators(K, gens));
            auto ind = induction_biset(K, sub);
            auto res = restriction_biset(K, sub);
            auto TH = char_table(sub.group);
            auto TK = char_table(K);
            for (auto& a : TH.rows)
                for (auto& b : TK.rows) {
                    if (!(act(ind, a) * b == act(ind, a * act(res, b)))) pass = false;
                    if (!(b * act(ind, a) == act(ind, act(res, b) * a))) pass = false;
                }
        }
        s.add("Frobenius identities on subgroup fixtures", pass);
    }
    // endomorphisms of the trivial group compose as the algebra product
    {
        bool pass = true;
        std::mt19937_64 rng(77);
        for (auto& G : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
            Tensor3 OOG = tensor3(trivial_group(), trivial_group(), G);
            auto T = char_table(OOG.abc);
            ClassFunction beta = detail::random_virtual_character(T, rng);
            ClassFunction alpha = detail::random_virtual_character(T, rng);
            ClassFunction pointwise{OOG.abc, (beta * alpha).values};
            if (!(shifted_compose(beta, OOG, alpha, OOG, OOG) == pointwise)) pass = false;
            if (!(shifted_compose_oracle(beta, OOG, alpha, OOG, OOG) == pointwise)) pass = false;
        }
        s.add("End(1) composes as the value algebra", pass);
    }
    // inflations from the two factors compose to the outer product
    {
        bool pass = true;
        for (auto& H : {cyclic_group(2), cyclic_group(3), symmetric_group(3)})
            for (auto& K : {cyclic_group(2), cyclic_group(4)}) {
                auto one = trivial_group();
                Tensor2 H1 = tensor2(H, one), OK = tensor2(one, K), HK = tensor2(H, K);
                auto TH = char_table(H);
                auto TK = char_table(K);
                for (auto& a : TH.rows)
                    for (auto& b : TK.rows) {
                        ClassFunction a_up{H1.ab, a.values};
                        ClassFunction b_up{OK.ab, b.values};
                        if (!(compose_hom(a_up, H1, b_up, OK, HK) == outer_product(a, b, HK.ab)))
                            pass = false;
                    }
            }
        s.add("inflated factors compose to outer products", pass);
    }
    // inflating the left factor turns the shifted product into the plain one
    {
        bool pass = true;
        std::mt19937_64 rng(78);
        for (auto& K : {cyclic_group(2), cyclic_group(3)})
            for (auto& H : {cyclic_group(2), symmetric_group(3)})
                for (auto& G : {cyclic_group(2), cyclic_group(3)}) {
                    Tensor2 KG = tensor2(K, G), HG = tensor2(H, G);
                    Tensor3 KHG = tensor3(K, H, G);
                    auto TK = char_table(K);
                    auto THG = char_table(HG.ab);
                    ClassFunction a = detail::random_virtual_character(TK, rng);
                    ClassFunction b = detail::random_virtual_character(THG, rng);
                    ClassFunction inf_a = outer_product(a, constant_function(G, Cyclo(1)), KG.ab);
                    if (!(shifted_product(inf_a, KG, b, HG, KHG) == outer_product(a, b, KHG.abc)))
                        pass = false;
                }
        s.add("inflated left factors multiply as outer products", pass);
    }
    return s;
}

// Criterion 11: seed triplet counts.
inline Suite seed_count_suite() {
    Suite s{"seeds", {}};
    long a = seed_triplet_count(cyclic_group(2), 3);
    s.add("seed triplets of C_2 at order 3 = 2", a == 2, a == 2 ? "" : "got " + std::to_string(a));
    long b = seed_triplet_count(symmetric_group(3), 5);
    s.add("seed triplets of S_3 at order 5 = 9", b == 9, b == 9 ? "" : "got " + std::to_string(b));
    return s;
}

inline std::vector<std::string> suite_names() {
    return {"chartable", "idempotents", "omega", "ideals", "functoriality",
            "shifted", "essential", "essalg-product", "factor-rank",
            "green-axioms", "seeds"};
}

inline Suite run_suite(const std::string& name, int max_order = 0) {
    if (name == "chartable") return chartable_suite(max_order);
    if (name == "idempotents") return idempotent_suite(max_order);
    if (name == "omega") return omega_suite(max_order);
    if (name == "ideals") return ideal_suite();
    if (name == "functoriality") return functoriality_suite();
    if (name == "shifted") return kernel_oracle_suite();
    if (name == "essential") return essential_suite(max_order > 0 ? std::min(max_order, 8) : 8);
    if (name == "essalg-product") return essalg_product_suite();
    if (name == "factor-rank") return factor_rank_suite();
    if (name == "green-axioms") return green_axioms_suite();
    if (name == "seeds") return seed_count_suite();
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

} // namespace greenring::verify
