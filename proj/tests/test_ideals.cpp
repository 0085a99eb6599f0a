#include <catch2/catch_amalgamated.hpp>

#include <greenring/ideals.hpp>

using namespace greenring;

namespace {

struct Lattice {
    GroupPtr one = trivial_group();
    GroupPtr c2 = cyclic_group(2);
    GroupPtr c3 = cyclic_group(3);
    GroupPtr c4 = cyclic_group(4);
    GroupPtr s3 = symmetric_group(3);

    std::vector<GroupPtr> members() const { return {one, c2, c3, c4, s3}; }

    // basic operations between lattice members (crossed with G later)
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
        out.push_back(iso_biset(c3, c3, {0, 2, 1})); // inversion automorphism
        return out;
    }
};

std::vector<IdealContext> fixture_contexts() {
    return {
        {FieldSpec::full(), FieldSpec::full(), cyclic_group(2)},
        {FieldSpec::rationals(), FieldSpec::full(), cyclic_group(3)},
        {FieldSpec::rationals(), FieldSpec::rationals(), symmetric_group(3)},
    };
}

std::vector<std::set<int>> all_subsets(int n) {
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.insert(i);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("ideal evaluation dimensions", "[ideals]") {
    // empty support evaluates to zero, full support to the whole functor
    for (auto& ctx : fixture_contexts()) {
        OrbitSpace base = context_omega(ctx);
        IdealSpec zero{ctx, {}};
        IdealSpec full_spec{ctx, {}};
        for (int o = 0; o < base.num_orbits(); ++o) full_spec.support.insert(o);
        for (auto& H : {trivial_group(), cyclic_group(2), symmetric_group(3)}) {
            auto ev0 = ideal_evaluation(zero, H);
            REQUIRE(ev0.dimension() == 0);
            auto ev1 = ideal_evaluation(full_spec, H);
            REQUIRE(ev1.dimension() == ev1.omega.num_orbits());
        }
    }

    // single-orbit support over G = C_2 at the trivial group
    IdealContext ctx{FieldSpec::full(), FieldSpec::full(), cyclic_group(2)};
    IdealSpec spec{ctx, {1}};
    auto ev = ideal_evaluation(spec, trivial_group());
    REQUIRE(ev.dimension() == 1);

    IdealSpec bad{ctx, {7}};
    REQUIRE_THROWS_AS(ideal_evaluation(bad, trivial_group()), std::out_of_range);
}

TEST_CASE("support and evaluation are mutually inverse", "[ideals]") {
    for (auto& ctx : fixture_contexts()) {
        OrbitSpace base = context_omega(ctx);
        for (auto& support : all_subsets(base.num_orbits())) {
            IdealSpec spec{ctx, support};
            auto ev = ideal_evaluation(spec, trivial_group());
            std::set<int> at_one(ev.qualifying.begin(), ev.qualifying.end());
            auto back = ideal_support_from_evaluation(ctx, at_one);
            REQUIRE(back.support == support);
        }
        // the empty evaluation gives the empty support, the full the full
        auto zero = ideal_support_from_evaluation(ctx, {});
        REQUIRE(zero.support.empty());
    }
}

TEST_CASE("lattice structure transports through evaluation", "[ideals]") {
    // unions and intersections of supports match sums and meets of evaluations
    for (auto& ctx : fixture_contexts()) {
        OrbitSpace base = context_omega(ctx);
        auto subsets = all_subsets(base.num_orbits());
        for (auto& A : subsets)
            for (auto& B : subsets) {
                std::set<int> uni, inter;
                std::set_union(A.begin(), A.end(), B.begin(), B.end(),
                               std::inserter(uni, uni.end()));
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                      std::inserter(inter, inter.end()));
                for (auto& H : {trivial_group(), cyclic_group(4)}) {
                    auto evA = ideal_evaluation({ctx, A}, H);
                    auto evB = ideal_evaluation({ctx, B}, H);
                    auto evU = ideal_evaluation({ctx, uni}, H);
                    auto evI = ideal_evaluation({ctx, inter}, H);
                    std::set<int> qa(evA.qualifying.begin(), evA.qualifying.end());
                    std::set<int> qb(evB.qualifying.begin(), evB.qualifying.end());
                    std::set<int> qu, qi;
                    std::set_union(qa.begin(), qa.end(), qb.begin(), qb.end(),
                                   std::inserter(qu, qu.end()));
                    std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                                          std::inserter(qi, qi.end()));
                    REQUIRE(std::set<int>(evU.qualifying.begin(), evU.qualifying.end()) == qu);
                    REQUIRE(std::set<int>(evI.qualifying.begin(), evI.qualifying.end()) == qi);
                }
            }
    }
}

TEST_CASE("closure under the basic operations", "[ideals]") {
    Lattice lat;
    auto bisets = lat.basic_bisets();
    for (auto& ctx : fixture_contexts()) {
        OrbitSpace base = context_omega(ctx);
        IdealSpec whole{ctx, {}};
        for (int o = 0; o < base.num_orbits(); ++o) whole.support.insert(o);
        for (auto& alpha : bisets) {
            Tensor2 HG = tensor2(alpha.right, ctx.G);
            Tensor2 KG = tensor2(alpha.left, ctx.G);
            OrbitSpace omega_h = orbit_space(HG.ab, ctx.k, ctx.F);
            OrbitSpace omega_k = orbit_space(KG.ab, ctx.k, ctx.F);
            auto pi2_h = orbit_second_projection(omega_h, HG, base);
            auto pi2_k = orbit_second_projection(omega_k, KG, base);
            Biset alphaG = biset_product(alpha, identity_biset(ctx.G), KG.ab, HG.ab);
            for (int o = 0; o < omega_h.num_orbits(); ++o) {
                KClassFunction moved = act_k(alphaG, idempotent_orbit(omega_h, o));
                REQUIRE(kclass_valid(moved));
                // nonzero components sit over the same orbit of the shift group
                for (int o2 = 0; o2 < omega_k.num_orbits(); ++o2) {
                    ClassFunction comp = moved.fn() * idempotent_orbit(omega_k, o2).fn();
                    if (!comp.is_zero()) REQUIRE(pi2_k[o2] == pi2_h[o]);
                }
                // membership in the evaluation of every ideal containing the source
                for (auto& support : all_subsets(base.num_orbits())) {
                    if (!support.count(pi2_h[o])) continue;
                    auto evK = ideal_evaluation({ctx, support}, alpha.left);
                    REQUIRE(in_ideal_span(evK, moved));
                }
            }
        }
    }
}

TEST_CASE("morphism support check", "[ideals]") {
    IdealContext ctx{FieldSpec::full(), FieldSpec::full(), cyclic_group(2)};
    auto c2 = cyclic_group(2);

    // identity: e_D (id e_C) is nonzero exactly on the diagonal
    auto idb = identity_biset(c2);
    Tensor2 HG = tensor2(c2, ctx.G);
    OrbitSpace omega = orbit_space(HG.ab, ctx.k, ctx.F);
    for (int c = 0; c < omega.num_orbits(); ++c)
        for (int d = 0; d < omega.num_orbits(); ++d)
            REQUIRE(check_morphism_support(ctx, idb, c, d) == (c == d));

    // deflation C_2 -> 1 against classes with distinct shift components
    auto q = quotient(c2, full_subgroup(c2));
    auto def = deflation_biset(c2, q);
    Tensor2 KG = tensor2(def.left, ctx.G);
    OrbitSpace omega_k = orbit_space(KG.ab, ctx.k, ctx.F);
    OrbitSpace base = context_omega(ctx);
    auto pi2_h = orbit_second_projection(omega, HG, base);
    auto pi2_k = orbit_second_projection(omega_k, KG, base);
    for (int c = 0; c < omega.num_orbits(); ++c)
        for (int d = 0; d < omega_k.num_orbits(); ++d) {
            bool hit = check_morphism_support(ctx, def, c, d);
            if (pi2_h[c] != pi2_k[d]) REQUIRE_FALSE(hit);
        }

    // exhaustive restriction table: hits imply matching projections
    auto res = restriction_biset(c2, subgroup_as_group(subgroup_from_generators(c2, {})));
    Tensor2 RG = tensor2(res.left, ctx.G);
    OrbitSpace omega_r = orbit_space(RG.ab, ctx.k, ctx.F);
    auto pi2_r = orbit_second_projection(omega_r, RG, base);
    for (int c = 0; c < omega.num_orbits(); ++c)
        for (int d = 0; d < omega_r.num_orbits(); ++d)
            if (check_morphism_support(ctx, res, c, d))
                REQUIRE(pi2_r[d] == pi2_h[c]);
}

TEST_CASE("semisimple decomposition dimensions", "[ideals]") {
    // the shift by the trivial group has a single simple summand
    IdealContext simple{FieldSpec::rationals(), FieldSpec::rationals(), trivial_group()};
    auto rows = semisimple_decomposition(simple, {trivial_group(), cyclic_group(3), symmetric_group(3)});
    for (auto& row : rows) {
        REQUIRE(row.orbit_dims.size() == 1);
        REQUIRE(row.total == row.omega_hg);
    }

    IdealContext c2full{FieldSpec::full(), FieldSpec::full(), cyclic_group(2)};
    auto r2 = semisimple_decomposition(c2full, {trivial_group()});
    REQUIRE(r2[0].orbit_dims == std::vector<int>{1, 1});
    REQUIRE(r2[0].total == 2);

    IdealContext c3q{FieldSpec::rationals(), FieldSpec::full(), cyclic_group(3)};
    auto r3 = semisimple_decomposition(c3q, {trivial_group()});
    REQUIRE(r3[0].orbit_dims == std::vector<int>{1, 1});
    REQUIRE(r3[0].total == 2);

    // every summand dimension column adds up to |Omega(k,F,HxG)|
    for (auto& ctx : fixture_contexts()) {
        auto rows2 = semisimple_decomposition(ctx, {trivial_group(), cyclic_group(2),
                                                    cyclic_group(4), symmetric_group(3)});
        for (auto& row : rows2) REQUIRE(row.total == row.omega_hg);
    }
}
