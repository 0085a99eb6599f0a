#pragma once

/**
 * Essential-algebra dimensions over a shift group: the endomorphism algebra
 * of H lives on H x H x G, and the ideal of morphisms factoring through
 * strictly smaller groups is spanned by kernel compositions of orbit
 * idempotents through each smaller K. Dimensions are exact ranks over the
 * cyclotomic field.
 *
 * The enumeration of smaller groups defaults to the cyclic groups of proper
 * divisor order; that shortcut is only valid at the rational F-level and,
 * for a nontrivial shift, when the shift's exponent divides the exponent of
 * H or the orders are coprime. Outside the hypothesis the caller must list
 * the smaller groups explicitly.
 */

#include <optional>

#include "group.hpp"
#include "linalg.hpp"
#include "rep_functor.hpp"
#include "shifted.hpp"

namespace greenring {

// Number of primitive characters of (Z/nZ)^x; multiplicative with
// prim(p^a) = phi(p^a) - phi(p^(a-1)); zero exactly when n = 2 mod 4.
inline long prim(long n) {
    if (n < 1) throw std::invalid_argument("prim: n must be positive");
    long out = 1;
    for (auto [p, a] : factorize(n)) {
        long pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        out *= euler_phi(pa) - (a >= 1 ? euler_phi(pa / p) : 0);
    }
    return out;
}

struct EssentialReport {
    GroupPtr H;
    long end_dim = 0;
    long ideal_dim = 0;
    long essential_dim = 0;
};

struct EssentialContext {
    FieldSpec k = FieldSpec::full();
    FieldSpec F = FieldSpec::rationals();
    GroupPtr G; // shift; trivial if empty
};

inline EssentialReport essential_dim(const EssentialContext& ctx, const GroupPtr& H,
                                     const std::optional<std::vector<GroupPtr>>& smaller_groups = std::nullopt) {
    if (ctx.k != FieldSpec::full())
        throw std::invalid_argument(
            "essential_dim: supported over the full cyclotomic coefficient field only "
            "(orbit idempotents are a basis of the hom-sets there)");
    GroupPtr G = ctx.G ? ctx.G : trivial_group();
    std::vector<GroupPtr> smaller;
    if (smaller_groups) {
        smaller = *smaller_groups;
    } else {
        bool hypothesis = ctx.F == FieldSpec::rationals() &&
                          (G->n == 1 || H->exponent % G->exponent == 0 ||
                           std::gcd(H->n, G->n) == 1);
        if (!hypothesis)
            throw std::invalid_argument(
                "essential_dim: cyclic-divisor shortcut needs a rational F-level and a shift with "
                "exponent dividing e(H) or order coprime to |H|; pass the smaller groups explicitly");
        for (long d : divisors(H->n))
            if (d < H->n) smaller.push_back(cyclic_group(static_cast<int>(d)));
    }

    Tensor3 HHG = tensor3(H, H, G);
    OrbitSpace end_omega = orbit_space(HHG.abc, ctx.k, ctx.F);
    EssentialReport report;
    report.H = H;
    report.end_dim = end_omega.num_orbits();

    RowSpace span(HHG.abc->num_classes());
    for (const auto& K : smaller) {
        Tensor3 HKG = tensor3(H, K, G); // betas: morphisms K -> H
        Tensor3 KHG = tensor3(K, H, G); // alphas: morphisms H -> K
        OrbitSpace ob = orbit_space(HKG.abc, ctx.k, ctx.F);
        OrbitSpace oa = orbit_space(KHG.abc, ctx.k, ctx.F);
        for (int bi = 0; bi < ob.num_orbits(); ++bi) {
            ClassFunction beta = idempotent_orbit(ob, bi).fn();
            for (int ai = 0; ai < oa.num_orbits(); ++ai) {
                ClassFunction alpha = idempotent_orbit(oa, ai).fn();
                ClassFunction comp = shifted_compose(beta, HKG, alpha, KHG, HHG);
                span.insert(comp.values);
            }
        }
    }
    report.ideal_dim = span.rank();
    report.essential_dim = report.end_dim - report.ideal_dim;
    if (report.essential_dim < 0)
        throw std::runtime_error("essential_dim: ideal dimension exceeds the algebra dimension");
    return report;
}

// Number of isomorphism classes of simple modules with minimal group of
// order m coprime to |G|: prim(m) times the number of conjugacy classes of
// cyclic subgroups of G.
inline long seed_triplet_count(const GroupPtr& G, long m) {
    if (m < 1) throw std::invalid_argument("seed_triplet_count: order must be positive");
    if (std::gcd(m, static_cast<long>(G->n)) != 1)
        throw std::invalid_argument("seed_triplet_count: order not coprime to the shift group");
    return prim(m) * static_cast<long>(cyclic_subgroups_up_to_conjugacy(G).size());
}

struct FactorRank {
    long rank = 0;
    long full_dim = 0;
};

// Rank of the span of compositions through the trivial group in the
// full-cyclotomic context: hom(H,K) over shift G against dim kR(K x H x G).
inline FactorRank factor_through_trivial_rank(const GroupPtr& K, const GroupPtr& H, const GroupPtr& G) {
    Tensor3 KHG = tensor3(K, H, G);
    Tensor3 bT = tensor3(K, trivial_group(), G);  // betas on K x 1 x G
    Tensor3 aT = tensor3(trivial_group(), H, G);  // alphas on 1 x H x G
    FactorRank out;
    out.full_dim = KHG.abc->num_classes();
    OrbitSpace ob = orbit_space(bT.abc, FieldSpec::full(), FieldSpec::full());
    OrbitSpace oa = orbit_space(aT.abc, FieldSpec::full(), FieldSpec::full());
    RowSpace span(KHG.abc->num_classes());
    for (int bi = 0; bi < ob.num_orbits(); ++bi) {
        ClassFunction beta = idempotent_orbit(ob, bi).fn();
        for (int ai = 0; ai < oa.num_orbits(); ++ai) {
            ClassFunction alpha = idempotent_orbit(oa, ai).fn();
            ClassFunction comp = shifted_compose(beta, bT, alpha, aT, KHG);
            span.insert(comp.values);
        }
    }
    out.rank = span.rank();
    return out;
}

} // namespace greenring
