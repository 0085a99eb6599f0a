#pragma once

/**
 * Explicit finite bisets: a point set with commuting left and right actions
 * given by dense tables. Transitive bisets come from subgroups of H x G, the
 * basic operations (Ind, Res, Inf, Def, Iso) from homomorphism-twisted group
 * bisets. Composition is the orbit space of the middle action, and bisets act
 * on class functions by the exact averaging formula
 *
 *     (X f)(h) = (1/|G|) sum over {u in X, g in G : h u = u g} of f(g).
 */

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "class_function.hpp"
#include "group.hpp"

namespace greenring {

struct Biset {
    GroupPtr left, right;
    int size = 0;
    std::vector<std::uint16_t> lact; // [h*size + x] = h*x
    std::vector<std::uint16_t> ract; // [x*|right| + g] = x*g

    int lmul(int h, int x) const { return lact[static_cast<size_t>(h) * size + x]; }
    int rmul(int x, int g) const { return ract[static_cast<size_t>(x) * right->n + g]; }

    // Checks both action laws and that they commute.
    void validate() const {
        const auto& H = *left;
        const auto& G = *right;
        for (int x = 0; x < size; ++x) {
            if (lmul(H.id, x) != x || rmul(x, G.id) != x)
                throw std::invalid_argument("biset: identity does not act trivially");
        }
        for (int x = 0; x < size; ++x) {
            for (int h1 = 0; h1 < H.n; ++h1)
                for (int h2 = 0; h2 < H.n; ++h2)
                    if (lmul(H.mul(h1, h2), x) != lmul(h1, lmul(h2, x)))
                        throw std::invalid_argument("biset: left action law fails");
            for (int g1 = 0; g1 < G.n; ++g1)
                for (int g2 = 0; g2 < G.n; ++g2)
                    if (rmul(x, G.mul(g1, g2)) != rmul(rmul(x, g1), g2))
                        throw std::invalid_argument("biset: right action law fails");
            for (int h = 0; h < H.n; ++h)
                for (int g = 0; g < G.n; ++g)
                    if (rmul(lmul(h, x), g) != lmul(h, rmul(x, g)))
                        throw std::invalid_argument("biset: actions do not commute");
        }
    }
};

namespace detail {

inline void check_hom(const GroupPtr& H, const GroupPtr& G, const std::vector<std::uint16_t>& phi) {
    if (static_cast<int>(phi.size()) != H->n)
        throw std::invalid_argument("homomorphism table has wrong size");
    for (auto v : phi)
        if (v >= G->n) throw std::invalid_argument("homomorphism image out of range");
    if (phi[H->id] != G->id) throw std::invalid_argument("homomorphism does not fix the identity");
    for (int a = 0; a < H->n; ++a)
        for (int b = 0; b < H->n; ++b)
            if (phi[H->mul(a, b)] != G->mul(phi[a], phi[b]))
                throw std::invalid_argument("table is not a homomorphism");
}

} // namespace detail

// The (H,G)-biset G twisted by phi: H -> G on the left: h*x*g = phi(h) x g.
inline Biset biset_left_twisted(const GroupPtr& H, const GroupPtr& G, const std::vector<std::uint16_t>& phi) {
    detail::check_hom(H, G, phi);
    Biset X{H, G, G->n, {}, {}};
    X.lact.resize(static_cast<size_t>(H->n) * G->n);
    X.ract.resize(static_cast<size_t>(G->n) * G->n);
    for (int h = 0; h < H->n; ++h)
        for (int x = 0; x < G->n; ++x)
            X.lact[static_cast<size_t>(h) * G->n + x] = static_cast<std::uint16_t>(G->mul(phi[h], x));
    for (int x = 0; x < G->n; ++x)
        for (int g = 0; g < G->n; ++g)
            X.ract[static_cast<size_t>(x) * G->n + g] = static_cast<std::uint16_t>(G->mul(x, g));
    return X;
}

// The (G,H)-biset G twisted by phi: H -> G on the right: g*x*h = g x phi(h).
inline Biset biset_right_twisted(const GroupPtr& G, const GroupPtr& H, const std::vector<std::uint16_t>& phi) {
    detail::check_hom(H, G, phi);
    Biset X{G, H, G->n, {}, {}};
    X.lact.resize(static_cast<size_t>(G->n) * G->n);
    X.ract.resize(static_cast<size_t>(G->n) * H->n);
    for (int g = 0; g < G->n; ++g)
        for (int x = 0; x < G->n; ++x)
            X.lact[static_cast<size_t>(g) * G->n + x] = static_cast<std::uint16_t>(G->mul(g, x));
    for (int x = 0; x < G->n; ++x)
        for (int h = 0; h < H->n; ++h)
            X.ract[static_cast<size_t>(x) * H->n + h] = static_cast<std::uint16_t>(G->mul(x, phi[h]));
    return X;
}

inline Biset identity_biset(const GroupPtr& G) {
    std::vector<std::uint16_t> id(G->n);
    std::iota(id.begin(), id.end(), 0);
    return biset_right_twisted(G, G, id);
}

// A subgroup presented as a group of its own plus the embedding into the parent.
struct EmbeddedGroup {
    GroupPtr group;
    std::vector<std::uint16_t> embed; // element of `group` -> element of the parent
};

inline EmbeddedGroup subgroup_as_group(const Subgroup& S) {
    const auto& G = *S.parent;
    int m = S.order();
    std::map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[S.elements[i]] = i;
    std::vector<std::uint16_t> t(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto it = pos.find(G.mul(S.elements[a], S.elements[b]));
            if (it == pos.end()) throw std::invalid_argument("subgroup is not closed");
            t[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>(it->second);
        }
    EmbeddedGroup out;
    out.group = group_from_table(G.name + ".sub" + std::to_string(m), m, std::move(t), false);
    out.embed = S.elements;
    return out;
}

// Induction Ind^G_H as the (G,H)-biset G.
inline Biset induction_biset(const GroupPtr& G, const EmbeddedGroup& H) {
    return biset_right_twisted(G, H.group, H.embed);
}

// Restriction Res^G_H as the (H,G)-biset G.
inline Biset restriction_biset(const GroupPtr& G, const EmbeddedGroup& H) {
    return biset_left_twisted(H.group, G, H.embed);
}

// Inflation Inf^G_{G/N} as the (G, G/N)-biset G/N.
inline Biset inflation_biset(const GroupPtr& G, const Quotient& Q) {
    return biset_left_twisted(G, Q.group, Q.projection);
}

// Deflation Def^G_{G/N} as the (G/N, G)-biset G/N.
inline Biset deflation_biset(const GroupPtr& G, const Quotient& Q) {
    return biset_right_twisted(Q.group, G, Q.projection);
}

// Iso(phi) for an isomorphism phi: H -> G, as the (G,H)-biset G.
inline Biset iso_biset(const GroupPtr& G, const GroupPtr& H, const std::vector<std::uint16_t>& phi) {
    std::vector<bool> hit(G->n, false);
    for (auto v : phi) hit[v] = true;
    if (H->n != G->n || std::count(hit.begin(), hit.end(), true) != G->n)
        throw std::invalid_argument("iso_biset: table is not a bijection");
    return biset_right_twisted(G, H, phi);
}

// The transitive (H,G)-biset (H x G)/D with h (a,b)D g = (ha, g^{-1} b)D,
// for D the subgroup generated by the given elements of H x G.
inline Biset biset_from_subgroup(const GroupPtr& H, const GroupPtr& G,
                                 const std::vector<std::pair<int, int>>& d_generators) {
    int nh = H->n, ng = G->n;
    for (auto [a, b] : d_generators)
        if (a < 0 || a >= nh || b < 0 || b >= ng)
            throw std::invalid_argument("biset_from_subgroup: generator outside H x G");
    // closure of D inside H x G, elements encoded a*ng + b
    std::set<int> D{H->id * ng + G->id};
    std::vector<int> todo(D.begin(), D.end());
    for (auto [a, b] : d_generators)
        if (D.insert(a * ng + b).second) todo.push_back(a * ng + b);
    while (!todo.empty()) {
        int cur = todo.back();
        todo.pop_back();
        int ca = cur / ng, cb = cur % ng;
        std::vector<int> nexts{H->inverse(ca) * ng + G->inverse(cb)};
        for (auto [a, b] : d_generators)
            nexts.push_back(H->mul(ca, a) * ng + G->mul(cb, b));
        for (int x : nexts)
            if (D.insert(x).second) todo.push_back(x);
    }
    // left cosets (a,b) D, labelled by their smallest member
    std::vector<int> coset_min(static_cast<size_t>(nh) * ng, -1);
    std::vector<int> reps;
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < ng; ++b) {
            int x = a * ng + b;
            if (coset_min[x] >= 0) continue;
            int m = x;
            std::vector<int> coset;
            for (int d : D) {
                int da = d / ng, db = d % ng;
                int y = H->mul(a, da) * ng + G->mul(b, db);
                coset.push_back(y);
                m = std::min(m, y);
            }
            for (int y : coset) coset_min[y] = m;
            reps.push_back(m);
        }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::map<int, int> index;
    for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
    Biset X{H, G, static_cast<int>(reps.size()), {}, {}};
    X.lact.resize(static_cast<size_t>(nh) * X.size);
    X.ract.resize(static_cast<size_t>(X.size) * ng);
    for (int h = 0; h < nh; ++h)
        for (int x = 0; x < X.size; ++x) {
            int a = reps[x] / ng, b = reps[x] % ng;
            X.lact[static_cast<size_t>(h) * X.size + x] =
                static_cast<std::uint16_t>(index.at(coset_min[H->mul(h, a) * ng + b]));
        }
    for (int x = 0; x < X.size; ++x)
        for (int g = 0; g < ng; ++g) {
            int a = reps[x] / ng, b = reps[x] % ng;
            X.ract[static_cast<size_t>(x) * ng + g] =
                static_cast<std::uint16_t>(index.at(coset_min[a * ng + G->mul(G->inverse(g), b)]));
        }
    return X;
}

inline Biset opposite(const Biset& X) {
    Biset Y{X.right, X.left, X.size, {}, {}};
    Y.lact.resize(static_cast<size_t>(X.right->n) * X.size);
    Y.ract.resize(static_cast<size_t>(X.size) * X.left->n);
    for (int g = 0; g < X.right->n; ++g)
        for (int x = 0; x < X.size; ++x)
            Y.lact[static_cast<size_t>(g) * X.size + x] =
                static_cast<std::uint16_t>(X.rmul(x, X.right->inverse(g)));
    for (int x = 0; x < X.size; ++x)
        for (int h = 0; h < X.left->n; ++h)
            Y.ract[static_cast<size_t>(x) * X.left->n + h] =
                static_cast<std::uint16_t>(X.lmul(X.left->inverse(h), x));
    return Y;
}

// Y o X for Y an (K,H)-biset and X an (H,G)-biset: the orbit space of
// h.(y,x) = (y h^{-1}, h x), with k [y,x] g = [k y, x g].
inline Biset compose(const Biset& Y, const Biset& X) {
    if (!Y.right->same_as(*X.left))
        throw std::invalid_argument("compose: middle groups differ");
    const auto& H = *Y.right;
    long pairs = static_cast<long>(Y.size) * X.size;
    std::vector<int> parent(pairs);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int y = 0; y < Y.size; ++y)
        for (int x = 0; x < X.size; ++x)
            for (int h = 0; h < H.n; ++h)
                unite(y * X.size + x, Y.rmul(y, H.inverse(h)) * X.size + X.lmul(h, x));
    std::map<int, int> index; // orbit root -> point id, ordered by root
    for (long i = 0; i < pairs; ++i) {
        int r = find(static_cast<int>(i));
        if (!index.count(r)) index[r] = 0;
    }
    int next = 0;
    for (auto& [root, id] : index) id = next++;
    Biset Z{Y.left, X.right, next, {}, {}};
    if (next > 65535) throw std::invalid_argument("compose: orbit space too large");
    Z.lact.resize(static_cast<size_t>(Y.left->n) * next);
    Z.ract.resize(static_cast<size_t>(next) * X.right->n);
    std::vector<int> rep_of(next);
    for (auto& [root, id] : index) rep_of[id] = root;
    for (int z = 0; z < next; ++z) {
        int y = rep_of[z] / X.size, x = rep_of[z] % X.size;
        for (int k = 0; k < Y.left->n; ++k)
            Z.lact[static_cast<size_t>(k) * next + z] =
                static_cast<std::uint16_t>(index.at(find(Y.lmul(k, y) * X.size + x)));
        for (int g = 0; g < X.right->n; ++g)
            Z.ract[static_cast<size_t>(z) * X.right->n + g] =
                static_cast<std::uint16_t>(index.at(find(y * X.size + X.rmul(x, g))));
    }
    return Z;
}

// Cartesian product, an (H x L, G x K)-biset on the product groups built by
// direct_product; the point (x,y) has index x*|Y| + y.
inline Biset biset_product(const Biset& X, const Biset& Y,
                           const GroupPtr& HL, const GroupPtr& GK) {
    if (HL->n != X.left->n * Y.left->n || GK->n != X.right->n * Y.right->n)
        throw std::invalid_argument("biset_product: wrong product groups");
    Biset Z{HL, GK, X.size * Y.size, {}, {}};
    Z.lact.resize(static_cast<size_t>(HL->n) * Z.size);
    Z.ract.resize(static_cast<size_t>(Z.size) * GK->n);
    for (int h = 0; h < X.left->n; ++h)
        for (int l = 0; l < Y.left->n; ++l)
            for (int x = 0; x < X.size; ++x)
                for (int y = 0; y < Y.size; ++y)
                    Z.lact[static_cast<size_t>(h * Y.left->n + l) * Z.size + x * Y.size + y] =
                        static_cast<std::uint16_t>(X.lmul(h, x) * Y.size + Y.lmul(l, y));
    for (int x = 0; x < X.size; ++x)
        for (int y = 0; y < Y.size; ++y)
            for (int g = 0; g < X.right->n; ++g)
                for (int k = 0; k < Y.right->n; ++k)
                    Z.ract[static_cast<size_t>(x * Y.size + y) * GK->n + g * Y.right->n + k] =
                        static_cast<std::uint16_t>(X.rmul(x, g) * Y.right->n + Y.rmul(y, k));
    return Z;
}

// Exact action of a biset on a class function (the averaging formula above).
inline ClassFunction act(const Biset& X, const ClassFunction& f) {
    if (!f.group->same_as(*X.right))
        throw std::invalid_argument("act: class function lives on the wrong group");
    const auto& H = *X.left;
    const auto& G = *X.right;
    ClassFunction out{X.left, std::vector<Cyclo>(H.num_classes(), Cyclo(0))};
    for (int c = 0; c < H.num_classes(); ++c) {
        int h = H.class_rep[c];
        std::vector<long> count(G.num_classes(), 0);
        for (int u = 0; u < X.size; ++u) {
            int hu = X.lmul(h, u);
            for (int g = 0; g < G.n; ++g)
                if (X.rmul(u, g) == hu) ++count[G.class_of[g]];
        }
        Cyclo acc(0);
        for (int gc = 0; gc < G.num_classes(); ++gc)
            if (count[gc]) acc += Cyclo(Rat(count[gc])) * f.values[gc];
        out.values[c] = acc * Cyclo(Rat(1, G.n));
    }
    return out;
}

// Left-action table of a biset, viewed as a plain G-set.
inline std::vector<std::vector<std::uint16_t>> left_action_table(const Biset& X) {
    std::vector<std::vector<std::uint16_t>> t(X.left->n, std::vector<std::uint16_t>(X.size));
    for (int h = 0; h < X.left->n; ++h)
        for (int x = 0; x < X.size; ++x)
            t[h][x] = static_cast<std::uint16_t>(X.lmul(h, x));
    return t;
}

namespace detail {

inline std::vector<std::vector<int>> biset_orbits(const Biset& X) {
    std::vector<int> parent(X.size);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int x = 0; x < X.size; ++x) {
        for (int h = 0; h < X.left->n; ++h) parent[find(X.lmul(h, x))] = find(x);
        for (int g = 0; g < X.right->n; ++g) parent[find(X.rmul(x, g))] = find(x);
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < X.size; ++x) groups[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, pts] : groups) out.push_back(pts);
    return out;
}

// Extends the partial map by the seed pair and propagates through both
// actions; returns false on conflict.
inline bool propagate_iso(const Biset& X, const Biset& Y, std::vector<int>& map, int sx, int sy) {
    std::vector<int> stack{sx};
    if (map[sx] != -1) return map[sx] == sy;
    map[sx] = sy;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int y = map[x];
        for (int h = 0; h < X.left->n; ++h) {
            int xx = X.lmul(h, x), yy = Y.lmul(h, y);
            if (map[xx] == -1) { map[xx] = yy; stack.push_back(xx); }
            else if (map[xx] != yy) return false;
        }
        for (int g = 0; g < X.right->n; ++g) {
            int xx = X.rmul(x, g), yy = Y.rmul(y, g);
            if (map[xx] == -1) { map[xx] = yy; stack.push_back(xx); }
            else if (map[xx] != yy) return false;
        }
    }
    return true;
}

inline bool match_orbits(const Biset& X, const Biset& Y,
                         const std::vector<std::vector<int>>& xorbs,
                         std::vector<bool>& used_y_point,
                         std::vector<int>& map, size_t oi) {
    if (oi == xorbs.size()) return true;
    int seed = xorbs[oi][0];
    for (int ty = 0; ty < Y.size; ++ty) {
        if (used_y_point[ty]) continue;
        std::vector<int> saved = map;
        auto saved_used = used_y_point;
        if (propagate_iso(X, Y, map, seed, ty)) {
            bool ok = true;
            std::set<int> images;
            for (int x : xorbs[oi]) {
                if (map[x] == -1 || used_y_point[map[x]] || images.count(map[x])) { ok = false; break; }
                images.insert(map[x]);
            }
            if (ok) {
                for (int im : images) used_y_point[im] = true;
                if (match_orbits(X, Y, xorbs, used_y_point, map, oi + 1)) return true;
            }
        }
        map = std::move(saved);
        used_y_point = std::move(saved_used);
    }
    return false;
}

} // namespace detail

// Isomorphism of bisets over identical groups: same size, matching orbit
// decomposition and an action-preserving relabelling found by propagation.
inline bool bisets_isomorphic(const Biset& X, const Biset& Y) {
    if (!X.left->same_as(*Y.left) || !X.right->same_as(*Y.right)) return false;
    if (X.size != Y.size) return false;
    auto xorbs = detail::biset_orbits(X);
    auto yorbs = detail::biset_orbits(Y);
    std::multiset<size_t> xs, ys;
    for (auto& o : xorbs) xs.insert(o.size());
    for (auto& o : yorbs) ys.insert(o.size());
    if (xs != ys) return false;
    std::vector<int> map(X.size, -1);
    std::vector<bool> used(Y.size, false);
    return detail::match_orbits(X, Y, xorbs, used, map, 0);
}

} // namespace greenring
