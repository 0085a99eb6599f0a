#pragma once

#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace greenring {

// One exact value per conjugacy class.
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclo> values;

    const Cyclo& at_class(int c) const { return values[c]; }
    const Cyclo& at_element(int g) const { return values[group->class_of[g]]; }

    bool is_zero() const {
        for (auto& v : values)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group->same_as(*b.group) && a.values == b.values;
    }
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }
};

inline ClassFunction constant_function(const GroupPtr& G, const Cyclo& v) {
    return ClassFunction{G, std::vector<Cyclo>(G->num_classes(), v)};
}

inline ClassFunction class_indicator(const GroupPtr& G, int c) {
    ClassFunction f{G, std::vector<Cyclo>(G->num_classes(), Cyclo(0))};
    f.values[c] = Cyclo(1);
    return f;
}

inline ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    if (!a.group->same_as(*b.group)) throw std::invalid_argument("class functions on different groups");
    ClassFunction out{a.group, a.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

inline ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    if (!a.group->same_as(*b.group)) throw std::invalid_argument("class functions on different groups");
    ClassFunction out{a.group, a.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

// Pointwise product (the ring structure of class functions).
inline ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (!a.group->same_as(*b.group)) throw std::invalid_argument("class functions on different groups");
    ClassFunction out{a.group, a.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

inline ClassFunction scale(const Cyclo& c, const ClassFunction& f) {
    ClassFunction out = f;
    for (auto& v : out.values) v *= c;
    return out;
}

// <f, g> = (1/|G|) sum_g f(g) conj(g), exact.
inline Cyclo inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (!f.group->same_as(*g.group)) throw std::invalid_argument("class functions on different groups");
    const auto& G = *f.group;
    Cyclo acc(0);
    for (int c = 0; c < G.num_classes(); ++c) {
        Cyclo term = f.values[c] * g.values[c].conjugate();
        acc += Cyclo(Rat(G.classes[c].size())) * term;
    }
    return acc * Cyclo(Rat(1, G.n));
}

// Outer product on a product group built as direct_product(A, B).
inline ClassFunction outer_product(const ClassFunction& f, const ClassFunction& g, const GroupPtr& AB) {
    const auto& A = *f.group;
    const auto& B = *g.group;
    if (AB->n != A.n * B.n) throw std::invalid_argument("outer_product: group is not the product");
    ClassFunction out{AB, std::vector<Cyclo>(AB->num_classes(), Cyclo(0))};
    for (int c = 0; c < AB->num_classes(); ++c) {
        int e = AB->class_rep[c];
        int a = e / B.n, b = e % B.n;
        out.values[c] = f.at_element(a) * g.at_element(b);
    }
    return out;
}

} // namespace greenring
