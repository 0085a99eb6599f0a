#pragma once

/**
 * The concrete model of the representation-ring functor values: a field is
 * presented by how its Galois group cuts into (Z/nZ)^x per modulus n, classes
 * fuse into F-classes through the power maps, and the coefficient field k
 * acts on F-classes through the same mechanism. Elements are class functions
 * with exact cyclotomic values subject to two stability conditions:
 *
 *   (i)  F-stability:       f(c^i) = f(c)            for i in F_n
 *   (ii) k-rationality:     sigma_j(f(c)) = f(c^j)   for j in K_n
 *
 * where sigma_j is lifted to fix k pointwise. This subspace has k-dimension
 * equal to the number of F-classes and carries the orbit idempotents.
 */

#include <functional>
#include <map>
#include <optional>

#include "char_table.hpp"
#include "class_function.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "numtheory.hpp"

namespace greenring {

enum class FieldKind { Rationals, Cyclotomic, FullCyclotomic, RealCyclotomic };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long d = 1; // only for Cyclotomic: the field is Q(w_d)

    static FieldSpec rationals() { return {FieldKind::Rationals, 1}; }
    static FieldSpec full() { return {FieldKind::FullCyclotomic, 1}; }
    static FieldSpec real() { return {FieldKind::RealCyclotomic, 1}; }
    static FieldSpec cyclotomic(long d) {
        if (d < 1) throw std::invalid_argument("cyclotomic field parameter must be positive");
        if (d % 4 == 2) d /= 2; // Q(w_2m) = Q(w_m) for odd m
        if (d <= 2) return rationals();
        return {FieldKind::Cyclotomic, d};
    }

    std::string str() const {
        switch (kind) {
            case FieldKind::Rationals: return "Q";
            case FieldKind::Cyclotomic: return "Q(w" + std::to_string(d) + ")";
            case FieldKind::FullCyclotomic: return "Qfull";
            case FieldKind::RealCyclotomic: return "Qreal";
        }
        return "?";
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind != FieldKind::Cyclotomic || a.d == b.d);
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

// Field DSL: Q, Q(w<d>), Qfull, Qreal.
inline FieldSpec parse_field(const std::string& s) {
    if (s == "Q") return FieldSpec::rationals();
    if (s == "Qfull") return FieldSpec::full();
    if (s == "Qreal") return FieldSpec::real();
    if (s.rfind("Q(w", 0) == 0 && s.back() == ')') {
        std::string num = s.substr(3, s.size() - 4);
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos)
            return FieldSpec::cyclotomic(std::stol(num));
    }
    throw std::invalid_argument("cannot parse field spec '" + s + "' (expected Q, Q(w<d>), Qfull, Qreal)");
}

struct GaloisSubgroup {
    long modulus = 1;
    std::vector<long> members; // ascending, contains 1, closed under multiplication
};

// The image of Gal(F(w_n)/F) in (Z/nZ)^x.
inline GaloisSubgroup materialize_galois(const FieldSpec& F, long n) {
    if (n < 1) throw std::invalid_argument("materialize_galois: modulus must be positive");
    GaloisSubgroup out;
    out.modulus = n;
    switch (F.kind) {
        case FieldKind::Rationals:
            out.members = units_mod(n);
            break;
        case FieldKind::FullCyclotomic:
            out.members = {1};
            break;
        case FieldKind::RealCyclotomic:
            out.members = {1};
            if (n > 2) out.members.push_back(n - 1);
            break;
        case FieldKind::Cyclotomic: {
            long g = std::gcd(F.d, n);
            for (long j : units_mod(n))
                if (j % g == 1 % g) out.members.push_back(j);
            break;
        }
    }
    return out;
}

// Modulus of the subfield that twist lifts must fix pointwise.
inline long field_lift_modulus(const FieldSpec& k) {
    return k.kind == FieldKind::Cyclotomic ? k.d : 1;
}

// "A is contained in B" on field specs (coarse, kind-level containment).
inline bool field_contained(const FieldSpec& A, const FieldSpec& B) {
    if (A == B) return true;
    if (A.kind == FieldKind::Rationals) return true;
    if (B.kind == FieldKind::FullCyclotomic) return true;
    if (A.kind == FieldKind::Cyclotomic && B.kind == FieldKind::Cyclotomic)
        return B.d % A.d == 0;
    return false;
}

struct FClassPartition {
    GroupPtr group;
    FieldSpec field;
    std::vector<std::vector<int>> blocks; // class indices, sorted; ordered by smallest class
    std::vector<int> block_of;            // class -> block

    int rep_class(int b) const { return blocks[b][0]; }
    int num_blocks() const { return static_cast<int>(blocks.size()); }

    // Image block under the power map c -> c^j.
    int power_block(int b, long j) const {
        return block_of[group->class_power(rep_class(b), j)];
    }
};

namespace detail {

inline std::vector<std::vector<int>> partition_from_parent(std::vector<int>& parent) {
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < parent.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a[0] < b[0]; });
    return out;
}

} // namespace detail

// F-conjugacy classes: the closure of ordinary conjugacy under c -> c^i, i in F_n.
inline FClassPartition f_classes(const GroupPtr& G, const FieldSpec& F) {
    long n = G->exponent;
    GaloisSubgroup Fn = materialize_galois(F, n);
    int r = G->num_classes();
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int c = 0; c < r; ++c)
        for (long i : Fn.members)
            parent[find(G->class_power(c, i))] = find(c);
    FClassPartition out;
    out.group = G;
    out.field = F;
    out.blocks = detail::partition_from_parent(parent);
    out.block_of.assign(r, -1);
    for (size_t b = 0; b < out.blocks.size(); ++b)
        for (int c : out.blocks[b]) out.block_of[c] = static_cast<int>(b);
    return out;
}

struct OrbitSpace {
    FClassPartition base; // F-class partition
    FieldSpec k_field;
    std::vector<std::vector<int>> orbits; // block indices, sorted; ordered by smallest block
    std::vector<int> orbit_of;            // block -> orbit

    int num_orbits() const { return static_cast<int>(orbits.size()); }
    int rep_block(int o) const { return orbits[o][0]; }
};

// Omega(k, F, G): orbits of K_n on the F-classes through the power maps.
inline OrbitSpace orbit_space(const GroupPtr& G, const FieldSpec& k, const FieldSpec& F) {
    OrbitSpace out;
    out.base = f_classes(G, F);
    out.k_field = k;
    long n = G->exponent;
    GaloisSubgroup Kn = materialize_galois(k, n);
    int nb = out.base.num_blocks();
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int b = 0; b < nb; ++b)
        for (long j : Kn.members)
            parent[find(out.base.power_block(b, j))] = find(b);
    out.orbits = detail::partition_from_parent(parent);
    out.orbit_of.assign(nb, -1);
    for (size_t o = 0; o < out.orbits.size(); ++o)
        for (int b : out.orbits[o]) out.orbit_of[b] = static_cast<int>(o);
    return out;
}

// An element of kR_F(G) in the class-function model.
struct KClassFunction {
    GroupPtr group;
    FieldSpec k_field, f_field;
    std::vector<Cyclo> values; // one per ordinary conjugacy class

    ClassFunction fn() const { return ClassFunction{group, values}; }
    const Cyclo& at_class(int c) const { return values[c]; }
    const Cyclo& at_element(int g) const { return values[group->class_of[g]]; }

    friend bool operator==(const KClassFunction& a, const KClassFunction& b) {
        return a.group->same_as(*b.group) && a.k_field == b.k_field &&
               a.f_field == b.f_field && a.values == b.values;
    }
};

// Checks invariants (i) and (ii) above.
inline bool kclass_valid(const KClassFunction& f) {
    const auto& G = *f.group;
    long n = G.exponent;
    GaloisSubgroup Fn = materialize_galois(f.f_field, n);
    for (int c = 0; c < G.num_classes(); ++c)
        for (long i : Fn.members)
            if (f.values[G.class_power(c, i)] != f.values[c]) return false;
    GaloisSubgroup Kn = materialize_galois(f.k_field, n);
    long dk = field_lift_modulus(f.k_field);
    long M = std::lcm(n, dk);
    for (long j : Kn.members) {
        if (j == 1) continue;
        long jp = unit_lift(j, n, dk);
        for (int c = 0; c < G.num_classes(); ++c) {
            if (M % f.values[c].conductor() != 0) return false;
            if (f.values[c].galois(jp) != f.values[G.class_power(c, j)]) return false;
        }
    }
    return true;
}

inline void kclass_validate_or_throw(const KClassFunction& f, const char* what) {
    if (!kclass_valid(f))
        throw std::runtime_error(std::string("invariant violation: ") + what);
}

// e^G_g as given by the character formula, asserted against the indicator.
inline ClassFunction idempotent_point(const CharTable& T, int c) {
    const auto& G = *T.group;
    int g = G.class_rep[c];
    int cinv = G.class_of[G.inverse(g)];
    ClassFunction e{T.group, std::vector<Cyclo>(G.num_classes(), Cyclo(0))};
    Cyclo norm(Rat(1, G.centralizer_order[c]));
    for (int cc = 0; cc < G.num_classes(); ++cc) {
        Cyclo acc(0);
        for (auto& chi : T.rows) acc += chi.values[cinv] * chi.values[cc];
        e.values[cc] = norm * acc;
    }
    for (int cc = 0; cc < G.num_classes(); ++cc)
        if (e.values[cc] != Cyclo(cc == c ? 1 : 0))
            throw std::runtime_error("invariant violation: point idempotent is not the class indicator");
    return e;
}

// e^G_C: the indicator of an F-class (an idempotent of F R_F(G), so k = F here).
inline KClassFunction idempotent_fclass(const FClassPartition& P, int block) {
    if (block < 0 || block >= P.num_blocks())
        throw std::out_of_range("idempotent_fclass: block index out of range");
    KClassFunction f{P.group, P.field, P.field,
                     std::vector<Cyclo>(P.group->num_classes(), Cyclo(0))};
    for (int c : P.blocks[block]) f.values[c] = Cyclo(1);
    return f;
}

// e^G_{O(C)}: the indicator of a K_n-orbit of F-classes, primitive in kR_F(G).
inline KClassFunction idempotent_orbit(const OrbitSpace& O, int orbit) {
    if (orbit < 0 || orbit >= O.num_orbits())
        throw std::out_of_range("idempotent_orbit: orbit index out of range");
    KClassFunction f{O.base.group, O.k_field, O.base.field,
                     std::vector<Cyclo>(O.base.group->num_classes(), Cyclo(0))};
    for (int b : O.orbits[orbit])
        for (int c : O.base.blocks[b]) f.values[c] = Cyclo(1);
    return f;
}

// [j] . f: coefficient twist combined with the class permutation; sends e_C
// to e_{C^j}. Requires gcd(j, exponent) = 1.
inline KClassFunction galois_twist(const KClassFunction& f, long j) {
    const auto& G = *f.group;
    long n = G.exponent;
    long jm = ((j % n) + n) % n;
    if (n > 1 && std::gcd(jm, n) != 1)
        throw std::invalid_argument("galois_twist: index not a unit modulo the exponent");
    long dk = field_lift_modulus(f.k_field);
    long jp = unit_lift(n > 1 ? jm : 1, n, dk);
    KClassFunction out{f.group, f.k_field, f.f_field,
                       std::vector<Cyclo>(G.num_classes())};
    for (int c = 0; c < G.num_classes(); ++c)
        out.values[G.class_power(c, jm)] = f.values[c].galois(jp);
    return out;
}

// Reinterprets f in kR_E(G) for a larger F-level E (the extension morphism;
// values are unchanged, the partition refines).
inline KClassFunction extend_scalars(const KClassFunction& f, const FieldSpec& E) {
    long n = f.group->exponent;
    GaloisSubgroup En = materialize_galois(E, n);
    GaloisSubgroup Fn = materialize_galois(f.f_field, n);
    for (long j : En.members)
        if (!std::binary_search(Fn.members.begin(), Fn.members.end(), j))
            throw std::invalid_argument("extend_scalars: target field does not contain the source");
    KClassFunction out = f;
    out.f_field = E;
    return out;
}

// Biset action on the model (the subfunctor structure): fields ride along.
template <typename BisetT>
inline KClassFunction act_k(const BisetT& X, const KClassFunction& f) {
    ClassFunction g = act(X, f.fn());
    return KClassFunction{g.group, f.k_field, f.f_field, std::move(g.values)};
}

// Orbit sums of the irreducible characters under the F_n twists; these are
// (rational multiples of) the irreducible F-characters and form a k-basis.
inline std::vector<ClassFunction> galois_orbit_sums(const CharTable& T, const FieldSpec& F) {
    const auto& G = *T.group;
    long n = G.exponent;
    GaloisSubgroup Fn = materialize_galois(F, n);
    int r = T.num_rows();
    auto row_index = [&](const std::vector<Cyclo>& vals) {
        for (int i = 0; i < r; ++i)
            if (T.rows[i].values == vals) return i;
        throw std::runtime_error("twisted character is not a row of the table");
    };
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int i = 0; i < r; ++i)
        for (long jj : Fn.members) {
            std::vector<Cyclo> twisted(r);
            for (int c = 0; c < r; ++c) twisted[c] = T.rows[i].values[G.class_power(c, jj)];
            parent[find(row_index(twisted))] = find(i);
        }
    auto orbits = detail::partition_from_parent(parent);
    std::vector<ClassFunction> sums;
    for (auto& orb : orbits) {
        ClassFunction s = constant_function(T.group, Cyclo(0));
        for (int i : orb) s = s + T.rows[i];
        sums.push_back(std::move(s));
    }
    return sums;
}

} // namespace greenring
