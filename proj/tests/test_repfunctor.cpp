#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <greenring/biset.hpp>
#include <greenring/linalg.hpp>
#include <greenring/rep_functor.hpp>

using namespace greenring;

namespace {

// Element-level oracle for F-conjugacy: close ordinary conjugacy together
// with g ~ g^i for i in F_n, working on raw elements.
std::vector<std::set<int>> brute_f_classes(const GroupPtr& G, const FieldSpec& F) {
    GaloisSubgroup Fn = materialize_galois(F, G->exponent);
    std::vector<int> parent(G->n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int g = 0; g < G->n; ++g) {
        for (int x = 0; x < G->n; ++x) parent[find(G->conjugate(x, g))] = find(g);
        for (long i : Fn.members) parent[find(G->power(g, i))] = find(g);
    }
    std::map<int, std::set<int>> blocks;
    for (int g = 0; g < G->n; ++g) blocks[find(g)].insert(g);
    std::vector<std::set<int>> out;
    for (auto& [r, s] : blocks) out.push_back(s);
    return out;
}

std::vector<GroupPtr> fixture_groups() {
    return {cyclic_group(3), cyclic_group(4), cyclic_group(6),
            symmetric_group(3), dihedral_group(4), quaternion_group()};
}

std::vector<FieldSpec> k_fields() {
    return {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::full()};
}

std::vector<FieldSpec> f_fields() {
    return {FieldSpec::rationals(), FieldSpec::full()};
}

} // namespace

TEST_CASE("field specs and their galois subgroups", "[repfunctor]") {
    REQUIRE(parse_field("Q") == FieldSpec::rationals());
    REQUIRE(parse_field("Q(w4)") == FieldSpec::cyclotomic(4));
    REQUIRE(parse_field("Qfull") == FieldSpec::full());
    REQUIRE(parse_field("Qreal") == FieldSpec::real());
    REQUIRE_THROWS_AS(parse_field("GF(7)"), std::invalid_argument);
    // Q(w_2m) = Q(w_m) normalization, and Q(w_2) = Q
    REQUIRE(FieldSpec::cyclotomic(6) == FieldSpec::cyclotomic(3));
    REQUIRE(FieldSpec::cyclotomic(2) == FieldSpec::rationals());

    REQUIRE(materialize_galois(FieldSpec::rationals(), 4).members == std::vector<long>{1, 3});
    REQUIRE(materialize_galois(FieldSpec::cyclotomic(4), 4).members == std::vector<long>{1});
    REQUIRE(materialize_galois(FieldSpec::cyclotomic(3), 4).members == std::vector<long>{1, 3});
    REQUIRE(materialize_galois(FieldSpec::full(), 12).members == std::vector<long>{1});
    REQUIRE(materialize_galois(FieldSpec::real(), 5).members == std::vector<long>{1, 4});

    // subgroup axioms over a grid
    for (auto F : {FieldSpec::rationals(), FieldSpec::cyclotomic(3), FieldSpec::cyclotomic(4),
                   FieldSpec::cyclotomic(8), FieldSpec::full(), FieldSpec::real()})
        for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
            auto S = materialize_galois(F, n);
            REQUIRE(std::binary_search(S.members.begin(), S.members.end(), 1L));
            for (long a : S.members)
                for (long b : S.members) {
                    long ab = n > 1 ? a * b % n : 1;
                    REQUIRE(std::binary_search(S.members.begin(), S.members.end(), ab));
                }
        }
}

TEST_CASE("cyclotomic galois rule against fixed-field computation", "[repfunctor]") {
    // j is in the image iff some lift j' (= j mod n) fixes w_d exactly
    for (auto [d, n] : std::vector<std::pair<long, long>>{{4, 4}, {3, 4}, {4, 5}, {2, 8}}) {
        auto K = materialize_galois(FieldSpec::cyclotomic(d), n);
        Cyclo wd = Cyclo::root_of_unity(d);
        long L = std::lcm(d, n);
        for (long j : units_mod(n)) {
            bool fixes = false;
            for (long jp : units_mod(L))
                if (jp % n == j && wd.galois(jp) == wd) { fixes = true; break; }
            bool in_K = std::binary_search(K.members.begin(), K.members.end(), j);
            REQUIRE(in_K == fixes);
        }
    }
}

TEST_CASE("f-classes", "[repfunctor]") {
    auto c4 = cyclic_group(4);
    auto P = f_classes(c4, FieldSpec::rationals());
    REQUIRE(P.blocks == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});

    // full cyclotomic level splits nothing beyond ordinary conjugacy
    for (auto& G : fixture_groups()) {
        auto Q = f_classes(G, FieldSpec::full());
        REQUIRE(Q.num_blocks() == G->num_classes());
    }

    auto s3 = symmetric_group(3);
    REQUIRE(f_classes(s3, FieldSpec::rationals()).num_blocks() == 3);

    // element-level oracle across the fixture grid
    for (auto& G : fixture_groups())
        for (auto F : {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::full(), FieldSpec::real()}) {
            auto P2 = f_classes(G, F);
            auto oracle = brute_f_classes(G, F);
            REQUIRE(P2.num_blocks() == static_cast<int>(oracle.size()));
            for (auto& block : P2.blocks) {
                std::set<int> elems;
                for (int c : block)
                    for (auto e : G->classes[c]) elems.insert(e);
                REQUIRE(std::count(oracle.begin(), oracle.end(), elems) == 1);
            }
        }

    // monotonicity: a larger F refines the partition
    for (auto& G : fixture_groups()) {
        REQUIRE(f_classes(G, FieldSpec::rationals()).num_blocks() <=
                f_classes(G, FieldSpec::real()).num_blocks());
        REQUIRE(f_classes(G, FieldSpec::real()).num_blocks() <=
                f_classes(G, FieldSpec::full()).num_blocks());
    }
}

TEST_CASE("orbit spaces", "[repfunctor]") {
    // k = F: all orbits are singletons
    for (auto& G : fixture_groups())
        for (auto F : f_fields()) {
            auto O = orbit_space(G, F, F);
            REQUIRE(O.num_orbits() == O.base.num_blocks());
            for (auto& orb : O.orbits) REQUIRE(orb.size() == 1);
        }

    auto O = orbit_space(cyclic_group(3), FieldSpec::rationals(), FieldSpec::full());
    REQUIRE(O.num_orbits() == 2);
    REQUIRE(O.orbits == std::vector<std::vector<int>>{{0}, {1, 2}});

    REQUIRE(orbit_space(cyclic_group(5), FieldSpec::cyclotomic(4), FieldSpec::full()).num_orbits() == 2);

    // |Omega(Q, Q, C_n)| counts divisors of n
    for (int n = 1; n <= 12; ++n)
        REQUIRE(orbit_space(cyclic_group(n), FieldSpec::rationals(), FieldSpec::rationals()).num_orbits() ==
                static_cast<int>(divisors(n).size()));

    // |Omega(Qfull, Qfull, G)| counts conjugacy classes
    for (auto& G : fixture_groups())
        REQUIRE(orbit_space(G, FieldSpec::full(), FieldSpec::full()).num_orbits() == G->num_classes());
}

TEST_CASE("model rank agrees with the f-class count", "[repfunctor]") {
    for (auto& G : fixture_groups())
        for (auto F : f_fields()) {
            auto T = char_table(G);
            auto sums = galois_orbit_sums(T, F);
            auto P = f_classes(G, F);
            REQUIRE(static_cast<int>(sums.size()) == P.num_blocks());
            // each orbit sum is a valid model element for every coefficient field
            for (auto k : k_fields())
                for (auto& s : sums) {
                    KClassFunction f{G, k, F, s.values};
                    REQUIRE(kclass_valid(f));
                }
            // and they are linearly independent
            RowSpace span(G->num_classes());
            for (auto& s : sums) REQUIRE(span.insert(s.values));
        }
}

TEST_CASE("point idempotents match class indicators", "[repfunctor]") {
    for (auto& G : fixture_groups()) {
        auto T = char_table(G);
        for (int c = 0; c < G->num_classes(); ++c) {
            auto e = idempotent_point(T, c); // asserts the indicator identity internally
            REQUIRE(e == class_indicator(G, c));
        }
    }
    // explicit small case: e_{C_2, class of the involution} = (triv - sgn)/2
    auto c2 = cyclic_group(2);
    auto T2 = char_table(c2);
    auto e = idempotent_point(T2, 1);
    REQUIRE(e.values == std::vector<Cyclo>{Cyclo(0), Cyclo(1)});
    auto half = Cyclo(Rat(1, 2));
    REQUIRE(e == scale(half, T2.rows[0] - T2.rows[1]));
}

TEST_CASE("orbit idempotents form a complete orthogonal family", "[repfunctor]") {
    for (auto& G : fixture_groups())
        for (auto k : k_fields())
            for (auto F : f_fields()) {
                if (!field_contained(k, F)) continue;
                auto O = orbit_space(G, k, F);
                std::vector<KClassFunction> es;
                for (int o = 0; o < O.num_orbits(); ++o) es.push_back(idempotent_orbit(O, o));
                ClassFunction sum = constant_function(G, Cyclo(0));
                for (size_t i = 0; i < es.size(); ++i) {
                    REQUIRE(kclass_valid(es[i]));
                    for (size_t j = 0; j < es.size(); ++j) {
                        ClassFunction prod = es[i].fn() * es[j].fn();
                        if (i == j) REQUIRE(prod == es[i].fn());
                        else REQUIRE(prod.is_zero());
                    }
                    sum = sum + es[i].fn();
                }
                REQUIRE(sum == constant_function(G, Cyclo(1)));
            }
}

TEST_CASE("galois twists move idempotents along the orbit", "[repfunctor]") {
    // [j] e_C = e_{C^j}
    for (auto& G : fixture_groups())
        for (auto F : f_fields()) {
            auto P = f_classes(G, F);
            for (int b = 0; b < P.num_blocks(); ++b)
                for (long j : units_mod(G->exponent)) {
                    auto e = idempotent_fclass(P, b);
                    auto twisted = galois_twist(e, j);
                    REQUIRE(twisted == idempotent_fclass(P, P.power_block(b, j)));
                }
        }

    auto c3 = cyclic_group(3);
    auto P3 = f_classes(c3, FieldSpec::full());
    REQUIRE(galois_twist(idempotent_fclass(P3, 1), 2) == idempotent_fclass(P3, 2));

    // j = 1 is the identity twist; rational values only get permuted
    auto P4 = f_classes(cyclic_group(4), FieldSpec::rationals());
    auto e = idempotent_fclass(P4, 1);
    REQUIRE(galois_twist(e, 1) == e);

    // k = F orbit idempotents coincide with the f-class idempotents
    for (auto& G : fixture_groups()) {
        auto F = FieldSpec::rationals();
        auto O = orbit_space(G, F, F);
        auto P = f_classes(G, F);
        for (int o = 0; o < O.num_orbits(); ++o)
            REQUIRE(idempotent_orbit(O, o).values == idempotent_fclass(P, O.rep_block(o)).values);
    }

    REQUIRE_THROWS_AS(galois_twist(idempotent_fclass(P4, 0), 2), std::invalid_argument);
}

TEST_CASE("orbit idempotents expand galois-stably over point idempotents", "[repfunctor]") {
    // the expansion of e_{O(C)} in the e_g basis is stable under K_n twists
    auto c3 = cyclic_group(3);
    auto O = orbit_space(c3, FieldSpec::rationals(), FieldSpec::full());
    auto e = idempotent_orbit(O, 1);
    REQUIRE(e.values == std::vector<Cyclo>{Cyclo(0), Cyclo(1), Cyclo(1)});
    for (long j : units_mod(3))
        REQUIRE(galois_twist(e, j) == e);
}

TEST_CASE("extension of scalars", "[repfunctor]") {
    auto c4 = cyclic_group(4);
    auto P = f_classes(c4, FieldSpec::rationals());
    auto e = idempotent_fclass(P, 1); // indicator of {1,3}

    // F = E is the identity
    auto same = extend_scalars(e, FieldSpec::rationals());
    REQUIRE(same.values == e.values);

    // into the full level: same values, now a sum of two class indicators
    auto up = extend_scalars(e, FieldSpec::full());
    REQUIRE(up.f_field == FieldSpec::full());
    REQUIRE(up.values == e.values);
    REQUIRE(kclass_valid(up));

    // two-step extension equals the direct one
    auto mid = extend_scalars(e, FieldSpec::cyclotomic(4));
    REQUIRE(extend_scalars(mid, FieldSpec::full()).values == up.values);

    // non-containment is rejected
    KClassFunction full_elem{c4, FieldSpec::full(), FieldSpec::full(),
                             class_indicator(c4, 1).values};
    REQUIRE_THROWS_AS(extend_scalars(full_elem, FieldSpec::rationals()), std::invalid_argument);
}

TEST_CASE("the action preserves the model invariants", "[repfunctor]") {
    // act sends twist-stable functions to twist-stable functions
    std::mt19937_64 rng(99);
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    int gen3 = -1;
    for (int g = 0; g < 6; ++g)
        if (s3->elem_order[g] == 3) { gen3 = g; break; }

    std::vector<Biset> bisets;
    auto c2_in_c4 = subgroup_as_group(subgroup_from_generators(c4, {2}));
    bisets.push_back(induction_biset(c4, c2_in_c4));
    bisets.push_back(restriction_biset(c4, c2_in_c4));
    auto qs3 = quotient(s3, subgroup_from_generators(s3, {gen3}));
    bisets.push_back(deflation_biset(s3, qs3));
    bisets.push_back(inflation_biset(s3, qs3));

    for (auto& X : bisets)
        for (auto k : k_fields())
            for (auto F : f_fields()) {
                auto T = char_table(X.right);
                auto sums = galois_orbit_sums(T, F);
                ClassFunction f = constant_function(X.right, Cyclo(0));
                for (auto& s : sums)
                    f = f + scale(Cyclo(Rat(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3))), s);
                KClassFunction kf{X.right, k, F, f.values};
                REQUIRE(kclass_valid(kf));
                REQUIRE(kclass_valid(act_k(X, kf)));
            }
}

TEST_CASE("projections map F-classes onto F-classes", "[repfunctor]") {
    struct Case { GroupPtr G; std::vector<int> normal_gens; };
    auto q8 = quaternion_group();
    int center_gen = -1;
    for (int g = 0; g < 8; ++g)
        if (q8->elem_order[g] == 2) { center_gen = g; break; }
    auto s3 = symmetric_group(3);
    int gen3 = -1;
    for (int g = 0; g < 6; ++g)
        if (s3->elem_order[g] == 3) { gen3 = g; break; }
    std::vector<Case> cases{
        {cyclic_group(4), {2}},
        {s3, {gen3}},
        {q8, {center_gen}}};
    for (auto& [G, gens] : cases) {
        auto q = quotient(G, subgroup_from_generators(G, gens));
        for (auto F : {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::real()}) {
            auto PG = f_classes(G, F);
            auto PQ = f_classes(q.group, F);
            for (auto& block : PG.blocks) {
                std::set<int> image;
                for (int c : block)
                    for (auto e : G->classes[c]) image.insert(q.projection[e]);
                // the image is exactly one F-class of the quotient
                std::set<int> expect;
                for (int qc : PQ.blocks[PQ.block_of[q.group->class_of[*image.begin()]]])
                    for (auto e : q.group->classes[qc]) expect.insert(e);
                REQUIRE(image == expect);
            }
        }
    }
}
