#pragma once

/**
 * Finite groups as dense multiplication tables, with conjugacy classes,
 * centralizer orders, element orders and the exponent computed up front.
 * Element indices are 16-bit; class representatives are the smallest
 * element index in the class, and classes are ordered by representative.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace greenring {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    std::string name;
    int n = 1;                                   // order
    std::vector<std::uint16_t> table;            // n*n, row-major: table[a*n+b] = a*b
    std::uint16_t id = 0;
    std::vector<std::uint16_t> inv;
    std::vector<int> elem_order;
    int exponent = 1;
    std::vector<std::uint16_t> class_of;         // element -> class index
    std::vector<std::vector<std::uint16_t>> classes; // each sorted, ordered by smallest member
    std::vector<std::uint16_t> class_rep;        // smallest element of each class
    std::vector<int> centralizer_order;          // per class

    int order() const { return n; }
    int num_classes() const { return static_cast<int>(classes.size()); }
    int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int conjugate(int x, int g) const { return mul(mul(x, g), inv[x]); } // x g x^-1

    int power(int g, long j) const {
        long m = elem_order[g];
        j %= m;
        if (j < 0) j += m;
        int acc = id;
        int base = g;
        while (j) {
            if (j & 1) acc = mul(acc, base);
            base = mul(base, base);
            j >>= 1;
        }
        return acc;
    }

    // Class of g^j for any representative g; well-defined by construction.
    int class_power(int c, long j) const { return class_of[power(class_rep[c], j)]; }

    int identity_class() const { return class_of[id]; }

    bool is_abelian() const {
        return static_cast<int>(classes.size()) == n;
    }

    bool same_as(const FiniteGroup& o) const {
        return this == &o || (n == o.n && id == o.id && table == o.table);
    }

    // Builds all derived data from `table` (and `id` if nonzero); throws if
    // the table is not a group.
    void finish(bool full_associativity_check) {
        if (n < 1 || static_cast<int>(table.size()) != n * n)
            throw std::invalid_argument("group table has wrong size");
        for (auto v : table)
            if (v >= n) throw std::invalid_argument("group table entry out of range");
        // locate identity
        int found_id = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int a = 0; a < n; ++a)
                if (mul(e, a) != a || mul(a, e) != a) { ok = false; break; }
            if (ok) { found_id = e; break; }
        }
        if (found_id < 0) throw std::invalid_argument("group table has no identity");
        id = static_cast<std::uint16_t>(found_id);
        // inverses
        inv.assign(n, 0);
        for (int a = 0; a < n; ++a) {
            int found = -1;
            for (int b = 0; b < n; ++b)
                if (mul(a, b) == id && mul(b, a) == id) { found = b; break; }
            if (found < 0) throw std::invalid_argument("group table has no inverse for an element");
            inv[a] = static_cast<std::uint16_t>(found);
        }
        if (full_associativity_check) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw std::invalid_argument("group table is not associative");
        }
        // element orders and exponent
        elem_order.assign(n, 1);
        exponent = 1;
        for (int a = 0; a < n; ++a) {
            int k = 1, x = a;
            while (x != id) { x = mul(x, a); ++k; }
            elem_order[a] = k;
            exponent = static_cast<int>(std::lcm<long>(exponent, k));
        }
        // conjugacy classes, ordered by smallest member
        class_of.assign(n, 0xffff);
        classes.clear();
        for (int a = 0; a < n; ++a) {
            if (class_of[a] != 0xffff) continue;
            std::set<int> orbit;
            for (int x = 0; x < n; ++x) orbit.insert(conjugate(x, a));
            std::vector<std::uint16_t> cls(orbit.begin(), orbit.end());
            std::uint16_t ci = static_cast<std::uint16_t>(classes.size());
            for (auto e : cls) class_of[e] = ci;
            classes.push_back(std::move(cls));
        }
        class_rep.clear();
        centralizer_order.clear();
        for (auto& cls : classes) {
            class_rep.push_back(cls.front());
            if (n % static_cast<int>(cls.size()) != 0)
                throw std::invalid_argument("class size does not divide group order");
            centralizer_order.push_back(n / static_cast<int>(cls.size()));
        }
    }
};

inline GroupPtr group_from_table(std::string name, int n, std::vector<std::uint16_t> table,
                                 bool full_associativity_check = true) {
    auto g = std::make_shared<FiniteGroup>();
    g->name = std::move(name);
    g->n = n;
    g->table = std::move(table);
    g->finish(full_associativity_check);
    return g;
}

inline GroupPtr trivial_group() {
    return group_from_table("1", 1, {0}, false);
}

inline GroupPtr cyclic_group(int m) {
    if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::uint16_t> t(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a) * m + b] = static_cast<std::uint16_t>((a + b) % m);
    return group_from_table(m == 1 ? "1" : "cyclic:" + std::to_string(m), m, std::move(t), false);
}

// Symmetries of the m-gon, order 2m. Element 2k is rotation by k, 2k+1 is a reflection.
inline GroupPtr dihedral_group(int m) {
    if (m < 1) throw std::invalid_argument("dihedral parameter must be positive");
    int n = 2 * m;
    auto idx = [m](int rot, int ref) { return 2 * rot + ref; };
    std::vector<std::uint16_t> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        int ra = a / 2, fa = a % 2;
        for (int b = 0; b < n; ++b) {
            int rb = b / 2, fb = b % 2;
            // (r^ra f^fa)(r^rb f^fb), with f r = r^-1 f
            int rot = fa == 0 ? (ra + rb) % m : ((ra - rb) % m + m) % m;
            int ref = (fa + fb) % 2;
            t[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(idx(rot, ref));
        }
    }
    return group_from_table("dihedral:" + std::to_string(m), n, std::move(t), false);
}

inline GroupPtr quaternion_group() {
    // elements 1,-1,i,-i,j,-j,k,-k as 0..7
    auto neg = [](int a) { return a ^ 1; };
    std::vector<std::uint16_t> t(64);
    auto set = [&](int a, int b, int c) { t[static_cast<size_t>(a) * 8 + b] = static_cast<std::uint16_t>(c); };
    const int one = 0, i = 2, j = 4, k = 6;
    int base[3] = {i, j, k};
    for (int a = 0; a < 8; ++a) set(one, a, a), set(neg(one), a, neg(a));
    for (int bi = 0; bi < 3; ++bi) {
        int u = base[bi];
        // u*1, u*-1
        set(u, one, u); set(u, neg(one), neg(u));
        set(neg(u), one, neg(u)); set(neg(u), neg(one), u);
        for (int bj = 0; bj < 3; ++bj) {
            int v = base[bj];
            int prod;
            if (bi == bj) prod = neg(one); // i*i = -1
            else if ((bi + 1) % 3 == bj) prod = base[(bi + 2) % 3]; // i*j = k
            else prod = neg(base[(bj + 2) % 3]); // j*i = -k
            set(u, v, prod);
            set(neg(u), v, neg(prod));
            set(u, neg(v), neg(prod));
            set(neg(u), neg(v), prod);
        }
    }
    return group_from_table("quaternion", 8, std::move(t), true);
}

namespace detail {

using Perm = std::vector<std::uint8_t>;

inline Perm perm_compose(const Perm& a, const Perm& b) {
    // (a b)(x) = a(b(x))
    Perm out(a.size());
    for (size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
}

inline GroupPtr group_from_perms(const std::string& name, const std::vector<Perm>& elements_sorted) {
    int n = static_cast<int>(elements_sorted.size());
    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i) index[elements_sorted[i]] = i;
    std::vector<std::uint16_t> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(perm_compose(elements_sorted[a], elements_sorted[b]));
            if (it == index.end()) throw std::invalid_argument("permutation set not closed");
            t[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(it->second);
        }
    return group_from_table(name, n, std::move(t), false);
}

inline bool perm_is_even(const Perm& p) {
    int transpositions = 0;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, x = i;
        while (!seen[x]) { seen[x] = true; x = p[x]; ++len; }
        transpositions += static_cast<int>(len) - 1;
    }
    return transpositions % 2 == 0;
}

} // namespace detail

inline GroupPtr symmetric_group(int m) {
    if (m < 1 || m > 5) throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
    detail::Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<detail::Perm> all;
    do all.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    std::sort(all.begin(), all.end());
    return detail::group_from_perms("sym:" + std::to_string(m), all);
}

inline GroupPtr alternating_group(int m) {
    if (m < 1 || m > 5) throw std::invalid_argument("alternating group supported for 1 <= n <= 5");
    detail::Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<detail::Perm> all;
    do {
        if (detail::perm_is_even(p)) all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(all.begin(), all.end());
    return detail::group_from_perms("alt:" + std::to_string(m), all);
}

// Closure of permutation generators on <= 16 points.
inline GroupPtr group_from_generators(const std::string& name,
                                      const std::vector<detail::Perm>& gens,
                                      int order_cap) {
    if (gens.empty()) return trivial_group();
    size_t pts = gens[0].size();
    if (pts > 16) throw std::invalid_argument("permutation specs limited to 16 points");
    for (auto& g : gens)
        if (g.size() != pts) throw std::invalid_argument("permutation generators act on different point counts");
    detail::Perm identity(pts);
    std::iota(identity.begin(), identity.end(), 0);
    std::set<detail::Perm> seen{identity};
    std::queue<detail::Perm> todo;
    todo.push(identity);
    while (!todo.empty()) {
        detail::Perm cur = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            detail::Perm prod = detail::perm_compose(cur, g);
            if (seen.insert(prod).second) {
                if (static_cast<int>(seen.size()) > order_cap)
                    throw std::invalid_argument("generated group exceeds the order cap");
                todo.push(prod);
            }
        }
    }
    std::vector<detail::Perm> all(seen.begin(), seen.end());
    return detail::group_from_perms(name, all);
}

// Direct product; element (a,b) has index a*|B| + b.
inline GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
    long n = static_cast<long>(A->n) * B->n;
    if (n > 4096) throw std::invalid_argument("product group too large (limit 4096)");
    std::vector<std::uint16_t> t(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < A->n; ++a1)
        for (int b1 = 0; b1 < B->n; ++b1)
            for (int a2 = 0; a2 < A->n; ++a2)
                for (int b2 = 0; b2 < B->n; ++b2) {
                    int x = a1 * B->n + b1, y = a2 * B->n + b2;
                    t[static_cast<size_t>(x) * n + y] =
                        static_cast<std::uint16_t>(A->mul(a1, a2) * B->n + B->mul(b1, b2));
                }
    auto g = std::make_shared<FiniteGroup>();
    g->name = "prod:[" + A->name + "],[" + B->name + "]";
    g->n = static_cast<int>(n);
    g->table = std::move(t);
    g->finish(false);
    return g;
}

struct Subgroup {
    GroupPtr parent;
    std::vector<std::uint16_t> elements; // sorted, closed, contains the identity

    bool contains(int e) const {
        return std::binary_search(elements.begin(), elements.end(), static_cast<std::uint16_t>(e));
    }
    int order() const { return static_cast<int>(elements.size()); }
};

inline Subgroup subgroup_from_generators(const GroupPtr& G, const std::vector<int>& gens) {
    std::set<int> seen{G->id};
    std::queue<int> todo;
    todo.push(G->id);
    for (int g : gens) {
        if (g < 0 || g >= G->n) throw std::invalid_argument("subgroup generator out of range");
        if (seen.insert(g).second) todo.push(g);
    }
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (int g : gens) {
            for (int prod : {G->mul(cur, g), G->mul(g, cur), G->inverse(cur)})
                if (seen.insert(prod).second) todo.push(prod);
        }
    }
    Subgroup s;
    s.parent = G;
    s.elements.assign(seen.begin(), seen.end());
    return s;
}

inline Subgroup cyclic_subgroup_of(const GroupPtr& G, int g) {
    return subgroup_from_generators(G, {g});
}

inline Subgroup full_subgroup(const GroupPtr& G) {
    Subgroup s;
    s.parent = G;
    s.elements.resize(G->n);
    std::iota(s.elements.begin(), s.elements.end(), 0);
    return s;
}

inline bool is_normal(const Subgroup& N) {
    const auto& G = *N.parent;
    for (int x = 0; x < G.n; ++x)
        for (auto e : N.elements)
            if (!N.contains(G.conjugate(x, e))) return false;
    return true;
}

struct Quotient {
    GroupPtr group;                       // the quotient group
    std::vector<std::uint16_t> projection; // parent element -> quotient element
};

// Quotient by a normal subgroup; cosets are indexed by their smallest member.
inline Quotient quotient(const GroupPtr& G, const Subgroup& N) {
    if (N.parent.get() != G.get() && !N.parent->same_as(*G))
        throw std::invalid_argument("quotient: subgroup of a different group");
    if (!is_normal(N)) throw std::invalid_argument("quotient: subgroup is not normal");
    int n = G->n;
    std::vector<int> coset_min(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (coset_min[g] >= 0) continue;
        std::set<int> coset;
        for (auto e : N.elements) coset.insert(G->mul(g, e));
        int m = *coset.begin();
        for (int x : coset) coset_min[x] = m;
        reps.push_back(m);
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, int> index;
    for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
    int q = static_cast<int>(reps.size());
    std::vector<std::uint16_t> t(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            t[static_cast<size_t>(a) * q + b] =
                static_cast<std::uint16_t>(index.at(coset_min[G->mul(reps[a], reps[b])]));
    Quotient out;
    out.group = group_from_table(G->name + "/N" + std::to_string(N.order()), q, std::move(t), false);
    out.projection.resize(n);
    for (int g = 0; g < n; ++g)
        out.projection[g] = static_cast<std::uint16_t>(index.at(coset_min[g]));
    return out;
}

// One representative per conjugacy class of cyclic subgroups, each generated
// by a class representative; ordered by (order, generating class index).
inline std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& G) {
    std::vector<Subgroup> reps;
    std::vector<std::vector<std::uint16_t>> rep_sets;
    for (int c = 0; c < G->num_classes(); ++c) {
        Subgroup s = cyclic_subgroup_of(G, G->class_rep[c]);
        bool conj = false;
        for (auto& t : rep_sets) {
            if (t.size() != s.elements.size()) continue;
            for (int x = 0; x < G->n && !conj; ++x) {
                std::vector<std::uint16_t> img;
                img.reserve(t.size());
                for (auto e : s.elements) img.push_back(static_cast<std::uint16_t>(G->conjugate(x, e)));
                std::sort(img.begin(), img.end());
                if (img == t) conj = true;
            }
            if (conj) break;
        }
        if (!conj) {
            rep_sets.push_back(s.elements);
            reps.push_back(std::move(s));
        }
    }
    std::stable_sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.order() < b.order();
    });
    return reps;
}

} // namespace greenring
