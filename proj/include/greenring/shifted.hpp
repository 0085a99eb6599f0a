#pragma once

/**
 * Shifted product and composition for class functions on product groups.
 *
 * The primary execution path uses the pointwise kernel forms
 *
 *   (a x^d b)(k,h,g)   = a(k,g) * b(h,g)
 *   (beta o alpha)(l,h,g) = (1/|K|) sum_k beta(l,k,g) * alpha(k,h,g)
 *
 * which are forced by the averaging formula applied to the defining bisets.
 * The definitional route (the explicit biset acting through the averaging
 * formula, with no shortcut) is kept alongside as the verification path;
 * both are required to agree by the test and acceptance suites.
 */

#include "biset.hpp"
#include "class_function.hpp"

namespace greenring {

struct Tensor2 {
    GroupPtr a, b;
    GroupPtr ab;
    int index(int x, int y) const { return x * b->n + y; }
    std::pair<int, int> split(int e) const { return {e / b->n, e % b->n}; }
};

inline Tensor2 tensor2(const GroupPtr& A, const GroupPtr& B) {
    return Tensor2{A, B, direct_product(A, B)};
}

struct Tensor3 {
    GroupPtr a, b, c;
    GroupPtr abc;
    int index(int x, int y, int z) const { return (x * b->n + y) * c->n + z; }
    std::tuple<int, int, int> split(int e) const {
        return {e / (b->n * c->n), e / c->n % b->n, e % c->n};
    }
};

inline Tensor3 tensor3(const GroupPtr& A, const GroupPtr& B, const GroupPtr& C) {
    return Tensor3{A, B, C, direct_product(direct_product(A, B), C)};
}

// a x^d b for a on K x G and b on H x G; the result lives on K x H x G.
inline ClassFunction shifted_product(const ClassFunction& a, const Tensor2& KG,
                                     const ClassFunction& b, const Tensor2& HG,
                                     const Tensor3& KHG) {
    if (!a.group->same_as(*KG.ab) || !b.group->same_as(*HG.ab))
        throw std::invalid_argument("shifted_product: operands on wrong groups");
    if (!KG.b->same_as(*HG.b) || !KHG.c->same_as(*KG.b))
        throw std::invalid_argument("shifted_product: shift groups differ");
    ClassFunction out{KHG.abc, std::vector<Cyclo>(KHG.abc->num_classes())};
    for (int c = 0; c < KHG.abc->num_classes(); ++c) {
        auto [k, h, g] = KHG.split(KHG.abc->class_rep[c]);
        out.values[c] = a.at_element(KG.index(k, g)) * b.at_element(HG.index(h, g));
    }
    return out;
}

// beta o alpha for beta on L x K x G and alpha on K x H x G.
inline ClassFunction shifted_compose(const ClassFunction& beta, const Tensor3& LKG,
                                     const ClassFunction& alpha, const Tensor3& KHG,
                                     const Tensor3& LHG) {
    if (!beta.group->same_as(*LKG.abc) || !alpha.group->same_as(*KHG.abc))
        throw std::invalid_argument("shifted_compose: operands on wrong groups");
    if (!LKG.b->same_as(*KHG.a))
        throw std::invalid_argument("shifted_compose: middle groups differ");
    if (!LKG.c->same_as(*KHG.c) || !LHG.c->same_as(*LKG.c))
        throw std::invalid_argument("shifted_compose: shift groups differ");
    const auto& K = *LKG.b;
    ClassFunction out{LHG.abc, std::vector<Cyclo>(LHG.abc->num_classes())};
    for (int c = 0; c < LHG.abc->num_classes(); ++c) {
        auto [l, h, g] = LHG.split(LHG.abc->class_rep[c]);
        Cyclo acc(0);
        for (int k = 0; k < K.n; ++k)
            acc += beta.at_element(LKG.index(l, k, g)) * alpha.at_element(KHG.index(k, h, g));
        out.values[c] = acc * Cyclo(Rat(1, K.n));
    }
    return out;
}

// Identity of the hom-category at K over shift G: (k1,k2,g) -> |C_K(k1)| on
// pairs of conjugate k1, k2, else 0.
inline ClassFunction identity_morphism(const Tensor3& KKG) {
    if (!KKG.a->same_as(*KKG.b))
        throw std::invalid_argument("identity_morphism: the two outer factors must agree");
    const auto& K = *KKG.a;
    ClassFunction out{KKG.abc, std::vector<Cyclo>(KKG.abc->num_classes(), Cyclo(0))};
    for (int c = 0; c < KKG.abc->num_classes(); ++c) {
        auto [k1, k2, g] = KKG.split(KKG.abc->class_rep[c]);
        (void)g;
        if (K.class_of[k1] == K.class_of[k2])
            out.values[c] = Cyclo(Rat(K.centralizer_order[K.class_of[k1]]));
    }
    return out;
}

// Unshifted hom-category composition: beta on L x K, alpha on K x H.
inline ClassFunction compose_hom(const ClassFunction& beta, const Tensor2& LK,
                                 const ClassFunction& alpha, const Tensor2& KH,
                                 const Tensor2& LH) {
    if (!LK.b->same_as(*KH.a)) throw std::invalid_argument("compose_hom: middle groups differ");
    const auto& K = *LK.b;
    ClassFunction out{LH.ab, std::vector<Cyclo>(LH.ab->num_classes())};
    for (int c = 0; c < LH.ab->num_classes(); ++c) {
        auto [l, h] = LH.split(LH.ab->class_rep[c]);
        Cyclo acc(0);
        for (int k = 0; k < K.n; ++k)
            acc += beta.at_element(LK.index(l, k)) * alpha.at_element(KH.index(k, h));
        out.values[c] = acc * Cyclo(Rat(1, K.n));
    }
    return out;
}

// Definitional route for x^d: restriction of the outer product along the
// diagonal embedding (k,h,g) -> (k,g,h,g), as an explicit biset.
inline ClassFunction shifted_product_oracle(const ClassFunction& a, const Tensor2& KG,
                                            const ClassFunction& b, const Tensor2& HG,
                                            const Tensor3& KHG) {
    GroupPtr P = direct_product(KG.ab, HG.ab);
    ClassFunction ab = outer_product(a, b, P);
    std::vector<std::uint16_t> phi(KHG.abc->n);
    for (int e = 0; e < KHG.abc->n; ++e) {
        auto [k, h, g] = KHG.split(e);
        phi[e] = static_cast<std::uint16_t>(KG.index(k, g) * HG.ab->n + HG.index(h, g));
    }
    Biset X = biset_left_twisted(KHG.abc, P, phi);
    return act(X, ab);
}

// Definitional route for the shifted composition: the explicit biset on the
// point set L x K x H x G x G with
//   (l,h,g) . (x,y,z,w1,w2) = (lx, y, hz, g w1, g w2)
//   (x,y,z,w1,w2) . (l',k1,g1,k2,h',g2) = (x l', k1^{-1} y k2, z h', w1 g1, w2 g2)
// acting on beta x alpha through the averaging formula, evaluated over the
// point and element tuples directly.
inline ClassFunction shifted_compose_oracle(const ClassFunction& beta, const Tensor3& LKG,
                                            const ClassFunction& alpha, const Tensor3& KHG,
                                            const Tensor3& LHG) {
    const auto& L = *LKG.a;
    const auto& K = *LKG.b;
    const auto& H = *KHG.b;
    const auto& G = *LKG.c;
    if (!beta.group->same_as(*LKG.abc) || !alpha.group->same_as(*KHG.abc))
        throw std::invalid_argument("shifted_compose_oracle: operands on wrong groups");
    const long nL = L.n, nK = K.n, nH = H.n, nG = G.n;
    const long npoints = nL * nK * nH * nG * nG;
    const long nB = nL * nK * nG * nK * nH * nG;

    // chi = (beta x alpha) evaluated on right-group tuples (l',k1,g1,k2,h',g2)
    std::vector<Cyclo> chi(static_cast<size_t>(nB));
    std::vector<bool> chi_nonzero(static_cast<size_t>(nB), false);
    {
        long idx = 0;
        for (long lp = 0; lp < nL; ++lp)
            for (long k1 = 0; k1 < nK; ++k1)
                for (long g1 = 0; g1 < nG; ++g1) {
                    const Cyclo& bv = beta.at_element(LKG.index(static_cast<int>(lp),
                                                               static_cast<int>(k1),
                                                               static_cast<int>(g1)));
                    bool bz = bv.is_zero();
                    for (long k2 = 0; k2 < nK; ++k2)
                        for (long hp = 0; hp < nH; ++hp)
                            for (long g2 = 0; g2 < nG; ++g2, ++idx) {
                                if (bz) continue;
                                const Cyclo& av = alpha.at_element(KHG.index(static_cast<int>(k2),
                                                                             static_cast<int>(hp),
                                                                             static_cast<int>(g2)));
                                if (av.is_zero()) continue;
                                chi[idx] = bv * av;
                                chi_nonzero[idx] = true;
                            }
                }
    }

    auto point_index = [&](long x, long y, long z, long w1, long w2) {
        return (((x * nK + y) * nH + z) * nG + w1) * nG + w2;
    };

    ClassFunction out{LHG.abc, std::vector<Cyclo>(LHG.abc->num_classes(), Cyclo(0))};
    std::vector<Cyclo> row(static_cast<size_t>(npoints));
    std::vector<long> touched;
    touched.reserve(static_cast<size_t>(npoints));
    for (long x = 0; x < nL; ++x)
        for (long y = 0; y < nK; ++y)
            for (long z = 0; z < nH; ++z)
                for (long w1 = 0; w1 < nG; ++w1)
                    for (long w2 = 0; w2 < nG; ++w2) {
                        for (long v : touched) row[v] = Cyclo(0);
                        touched.clear();
                        // u . b' for every right-group element b'
                        long idx = 0;
                        for (long lp = 0; lp < nL; ++lp) {
                            long xl = L.mul(static_cast<int>(x), static_cast<int>(lp));
                            for (long k1 = 0; k1 < nK; ++k1) {
                                long iy = K.mul(K.inverse(static_cast<int>(k1)), static_cast<int>(y));
                                for (long g1 = 0; g1 < nG; ++g1) {
                                    long wg1 = G.mul(static_cast<int>(w1), static_cast<int>(g1));
                                    for (long k2 = 0; k2 < nK; ++k2) {
                                        long yk = K.mul(static_cast<int>(iy), static_cast<int>(k2));
                                        for (long hp = 0; hp < nH; ++hp) {
                                            long zh = H.mul(static_cast<int>(z), static_cast<int>(hp));
                                            for (long g2 = 0; g2 < nG; ++g2, ++idx) {
                                                if (!chi_nonzero[idx]) continue;
                                                long wg2 = G.mul(static_cast<int>(w2), static_cast<int>(g2));
                                                long v = point_index(xl, yk, zh, wg1, wg2);
                                                if (row[v].is_zero() && !chi[idx].is_zero()) touched.push_back(v);
                                                row[v] += chi[idx];
                                            }
                                        }
                                    }
                                }
                            }
                        }
                        // contribute to every needed left value (l,h,g): v = a . u
                        for (int c = 0; c < LHG.abc->num_classes(); ++c) {
                            auto [l, h, g] = LHG.split(LHG.abc->class_rep[c]);
                            long v = point_index(L.mul(l, static_cast<int>(x)), y,
                                                 H.mul(h, static_cast<int>(z)),
                                                 G.mul(g, static_cast<int>(w1)),
                                                 G.mul(g, static_cast<int>(w2)));
                            if (!row[v].is_zero()) out.values[c] += row[v];
                        }
                    }
    Cyclo scale(Rat(1, nB));
    for (auto& v : out.values) v *= scale;
    return out;
}

} // namespace greenring
