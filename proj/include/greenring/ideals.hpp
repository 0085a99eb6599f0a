#pragma once

/**
 * The ideal lattice of the shifted functor in context (k, F, G): ideals are
 * represented by their support, a subset of Omega(k, F, G). Evaluation at a
 * group H materializes the orbit idempotents of H x G whose second
 * projection lands in the support; the inverse direction reads the support
 * off the evaluation at the trivial group.
 */

#include <set>

#include "biset.hpp"
#include "rep_functor.hpp"
#include "shifted.hpp"

namespace greenring {

struct IdealContext {
    FieldSpec k, F;
    GroupPtr G;
};

struct IdealSpec {
    IdealContext ctx;
    std::set<int> support; // orbit indices in Omega(k, F, G)
};

// Omega(k, F, G) for the context's shift group.
inline OrbitSpace context_omega(const IdealContext& ctx) {
    return orbit_space(ctx.G, ctx.k, ctx.F);
}

// Maps each orbit of Omega(k,F,X x G) to the orbit of Omega(k,F,G) containing
// the second projection of its F-classes. X x G must be a tensor2 product.
inline std::vector<int> orbit_second_projection(const OrbitSpace& omega_xg, const Tensor2& XG,
                                                const OrbitSpace& omega_g) {
    std::vector<int> out(omega_xg.num_orbits());
    for (int o = 0; o < omega_xg.num_orbits(); ++o) {
        int block = omega_xg.rep_block(o);
        int cls = omega_xg.base.rep_class(block);
        int e = omega_xg.base.group->class_rep[cls];
        int g = XG.split(e).second;
        int gcls = XG.b->class_of[g];
        out[o] = omega_g.orbit_of[omega_g.base.block_of[gcls]];
    }
    return out;
}

struct IdealEvaluation {
    Tensor2 HG;
    OrbitSpace omega;            // Omega(k, F, H x G)
    std::vector<int> orbit_pi2;  // orbit of H x G -> orbit of G
    std::vector<int> qualifying; // orbits in the evaluation's idempotent basis

    int dimension() const { return static_cast<int>(qualifying.size()); }
};

inline IdealEvaluation ideal_evaluation(const IdealSpec& spec, const GroupPtr& H) {
    IdealEvaluation out;
    out.HG = tensor2(H, spec.ctx.G);
    out.omega = orbit_space(out.HG.ab, spec.ctx.k, spec.ctx.F);
    OrbitSpace base = context_omega(spec.ctx);
    for (int o : spec.support)
        if (o < 0 || o >= base.num_orbits())
            throw std::out_of_range("ideal support references a nonexistent orbit");
    out.orbit_pi2 = orbit_second_projection(out.omega, out.HG, base);
    for (int o = 0; o < out.omega.num_orbits(); ++o)
        if (spec.support.count(out.orbit_pi2[o])) out.qualifying.push_back(o);
    return out;
}

inline std::vector<KClassFunction> ideal_basis(const IdealEvaluation& ev) {
    std::vector<KClassFunction> out;
    for (int o : ev.qualifying) out.push_back(idempotent_orbit(ev.omega, o));
    return out;
}

// Reads the support back from an evaluation at the trivial group, given as a
// set of orbit indices of Omega(k, F, 1 x G).
inline IdealSpec ideal_support_from_evaluation(const IdealContext& ctx,
                                               const std::set<int>& orbits_at_one) {
    Tensor2 OG = tensor2(trivial_group(), ctx.G);
    OrbitSpace omega1 = orbit_space(OG.ab, ctx.k, ctx.F);
    OrbitSpace base = context_omega(ctx);
    auto pi2 = orbit_second_projection(omega1, OG, base);
    IdealSpec out{ctx, {}};
    for (int o : orbits_at_one) {
        if (o < 0 || o >= omega1.num_orbits())
            throw std::out_of_range("evaluation references a nonexistent orbit of 1 x G");
        out.support.insert(pi2[o]);
    }
    return out;
}

// Membership of f in the span of an evaluation's idempotent basis: f must be
// a valid model element vanishing outside the supported classes.
inline bool in_ideal_span(const IdealEvaluation& ev, const KClassFunction& f) {
    if (!f.group->same_as(*ev.HG.ab)) return false;
    std::vector<bool> supported(f.group->num_classes(), false);
    for (int o : ev.qualifying)
        for (int b : ev.omega.orbits[o])
            for (int c : ev.omega.base.blocks[b]) supported[c] = true;
    for (int c = 0; c < f.group->num_classes(); ++c)
        if (!supported[c] && !f.values[c].is_zero()) return false;
    return true;
}

// Whether e_{O(D)} * (alpha x G)(e_{O(C)}) is nonzero, for alpha a biset
// between H (right) and K (left); C is an orbit of H x G, D of K x G.
inline bool check_morphism_support(const IdealContext& ctx, const Biset& alpha,
                                   int orbit_C, int orbit_D) {
    Tensor2 HG = tensor2(alpha.right, ctx.G);
    Tensor2 KG = tensor2(alpha.left, ctx.G);
    OrbitSpace omega_h = orbit_space(HG.ab, ctx.k, ctx.F);
    OrbitSpace omega_k = orbit_space(KG.ab, ctx.k, ctx.F);
    KClassFunction eC = idempotent_orbit(omega_h, orbit_C);
    KClassFunction eD = idempotent_orbit(omega_k, orbit_D);
    Biset alphaG = biset_product(alpha, identity_biset(ctx.G), KG.ab, HG.ab);
    KClassFunction moved = act_k(alphaG, eC);
    ClassFunction prod = eD.fn() * moved.fn();
    return !prod.is_zero();
}

struct SemisimpleRow {
    GroupPtr H;
    std::vector<int> orbit_dims; // dim I_{O(C)}(H) per orbit of Omega(k,F,G)
    int total = 0;
    int omega_hg = 0; // |Omega(k, F, H x G)|
};

// Per-orbit dimension table of the decomposition into minimal ideals.
inline std::vector<SemisimpleRow> semisimple_decomposition(const IdealContext& ctx,
                                                           const std::vector<GroupPtr>& hs) {
    OrbitSpace base = context_omega(ctx);
    std::vector<SemisimpleRow> out;
    for (const auto& H : hs) {
        Tensor2 HG = tensor2(H, ctx.G);
        OrbitSpace omega = orbit_space(HG.ab, ctx.k, ctx.F);
        auto pi2 = orbit_second_projection(omega, HG, base);
        SemisimpleRow row;
        row.H = H;
        row.orbit_dims.assign(base.num_orbits(), 0);
        for (int o = 0; o < omega.num_orbits(); ++o) ++row.orbit_dims[pi2[o]];
        for (int d : row.orbit_dims) row.total += d;
        row.omega_hg = omega.num_orbits();
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace greenring
