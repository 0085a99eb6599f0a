#pragma once

/**
 * Exact complex character tables by Dixon's method: characters are found
 * modulo a prime p ≡ 1 (mod exponent), p > 2*sqrt(|G|), as common
 * eigenvectors of the class multiplication matrices, then lifted to
 * cyclotomic values through eigenvalue counts recovered by discrete
 * logarithms against a fixed primitive root of unity mod p.
 */

#include <cstdint>
#include <random>

#include "class_function.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "numtheory.hpp"

namespace greenring {

struct CharTable {
    GroupPtr group;
    std::vector<ClassFunction> rows; // sorted: degree, trivial first, then values
    std::vector<long> degrees;

    int num_rows() const { return static_cast<int>(rows.size()); }
};

namespace detail {

using ModVec = std::vector<std::uint64_t>;
using ModMat = std::vector<ModVec>;

// Basis of a subspace of F_p^r kept in reduced row echelon form.
struct ModSubspace {
    ModMat basis;             // rows
    std::vector<int> pivots;  // pivot column per row, increasing
    bool exhausted = false;   // no class operator splits it further
};

inline void mod_rref(ModMat& m, std::vector<int>& pivots, std::uint64_t p) {
    pivots.clear();
    size_t rows = m.size();
    if (rows == 0) return;
    size_t cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && m[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        std::uint64_t inv = inv_mod(m[rank][col], p);
        for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            std::uint64_t f = m[r][col];
            for (size_t c = col; c < cols; ++c)
                m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    m.resize(rank);
}

// Characteristic polynomial over F_p via Hessenberg reduction.
inline ModVec mod_charpoly(ModMat a, std::uint64_t p) {
    size_t d = a.size();
    // reduce to upper Hessenberg by similarity transforms
    for (size_t col = 0; col + 2 < d; ++col) {
        size_t pr = col + 1;
        while (pr < d && a[pr][col] == 0) ++pr;
        if (pr == d) continue;
        if (pr != col + 1) {
            std::swap(a[pr], a[col + 1]);
            for (size_t r = 0; r < d; ++r) std::swap(a[r][pr], a[r][col + 1]);
        }
        std::uint64_t inv = inv_mod(a[col + 1][col], p);
        for (size_t r = col + 2; r < d; ++r) {
            std::uint64_t f = a[r][col] * inv % p;
            if (f == 0) continue;
            for (size_t c = 0; c < d; ++c)
                a[r][c] = (a[r][c] + (p - f) * a[col + 1][c]) % p;
            for (size_t r2 = 0; r2 < d; ++r2)
                a[r2][col + 1] = (a[r2][col + 1] + f * a[r2][r]) % p;
        }
    }
    // p_k(x) = det(xI - H_k) recurrence for Hessenberg H
    std::vector<ModVec> polys(d + 1);
    polys[0] = {1};
    for (size_t k = 0; k < d; ++k) {
        ModVec& out = polys[k + 1];
        out.assign(k + 2, 0);
        // (x - h_kk) * p_k
        for (size_t i = 0; i <= k; ++i) {
            out[i + 1] = (out[i + 1] + polys[k][i]) % p;
            out[i] = (out[i] + (p - a[k][k] % p) * polys[k][i]) % p;
        }
        std::uint64_t run = 1;
        for (size_t i = k; i >= 1; --i) {
            run = run * a[i][i - 1] % p;
            if (run == 0) break;
            std::uint64_t coef = a[i - 1][k] * run % p;
            if (coef != 0)
                for (size_t t = 0; t < i; ++t)
                    out[t] = (out[t] + (p - coef) * polys[i - 1][t]) % p;
        }
    }
    return polys[d];
}

inline std::vector<std::uint64_t> mod_poly_roots(const ModVec& poly, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

// Kernel basis of (a - lambda I) over F_p.
inline ModMat mod_eigenspace(const ModMat& a, std::uint64_t lambda, std::uint64_t p) {
    size_t d = a.size();
    ModMat m = a;
    for (size_t i = 0; i < d; ++i) m[i][i] = (m[i][i] + p - lambda % p) % p;
    std::vector<int> pivots;
    mod_rref(m, pivots, p);
    std::vector<bool> is_pivot(d, false);
    for (int c : pivots) is_pivot[c] = true;
    ModMat kern;
    for (size_t freec = 0; freec < d; ++freec) {
        if (is_pivot[freec]) continue;
        ModVec v(d, 0);
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - m[r][freec] % p) % p;
        kern.push_back(std::move(v));
    }
    return kern;
}

} // namespace detail

// Exact irreducible character table. Throws if construction fails or the
// exact orthogonality validation does not hold.
inline CharTable char_table(const GroupPtr& G) {
    using namespace detail;
    const int r = G->num_classes();
    const int n = G->n;
    const long e = G->exponent;

    long sq = 1;
    while (sq * sq <= 4L * n) ++sq; // smallest sq with sq^2 > 4n, so sq > 2*sqrt(n)
    const std::uint64_t p = static_cast<std::uint64_t>(prime_in_progression(e, sq));

    // class multiplication matrices: (M_i)[j][k] = #{x in C_i : class(x^{-1} z_k) = j}
    std::vector<ModMat> mats(r, ModMat(r, ModVec(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int zk = G->class_rep[k];
            for (auto x : G->classes[i]) {
                int j = G->class_of[G->mul(G->inverse(x), zk)];
                mats[i][j][k] += 1;
            }
        }

    const int idc = G->identity_class();

    // split F_p^r into common eigenspaces
    std::vector<ModSubspace> spaces(1);
    spaces[0].basis.assign(r, ModVec(r, 0));
    for (int i = 0; i < r; ++i) spaces[0].basis[i][i] = 1;
    spaces[0].pivots.resize(r);
    for (int i = 0; i < r; ++i) spaces[0].pivots[i] = i;

    std::mt19937_64 rng(0xD1230Full);
    auto apply_mat = [&](const ModMat& M, const ModVec& v) {
        ModVec out(r, 0);
        for (int row = 0; row < r; ++row) {
            std::uint64_t acc = 0;
            for (int c = 0; c < r; ++c)
                if (v[c]) acc = (acc + M[row][c] % p * v[c]) % p;
            out[row] = acc;
        }
        return out;
    };

    auto split_by = [&](const ModMat& M) {
        bool progress = false;
        std::vector<ModSubspace> next;
        for (auto& W : spaces) {
            size_t d = W.basis.size();
            if (d <= 1) { next.push_back(std::move(W)); continue; }
            // restriction of M to W in the RREF basis coordinates
            ModMat A(d, ModVec(d, 0));
            bool invariant = true;
            for (size_t s = 0; s < d && invariant; ++s) {
                ModVec u = apply_mat(M, W.basis[s]);
                ModVec coord(d);
                for (size_t t = 0; t < d; ++t) coord[t] = u[W.pivots[t]];
                // verify u lies in W
                for (int c = 0; c < r && invariant; ++c) {
                    std::uint64_t acc = 0;
                    for (size_t t = 0; t < d; ++t)
                        if (coord[t]) acc = (acc + coord[t] * W.basis[t][c]) % p;
                    if (acc != u[c]) invariant = false;
                }
                for (size_t t = 0; t < d; ++t) A[t][s] = coord[t];
            }
            if (!invariant)
                throw std::runtime_error("char_table: subspace not invariant (internal error)");
            auto roots = mod_poly_roots(mod_charpoly(A, p), p);
            if (roots.size() <= 1) { next.push_back(std::move(W)); continue; }
            for (auto lambda : roots) {
                ModMat kern = mod_eigenspace(A, lambda, p);
                ModSubspace sub;
                for (auto& kv : kern) {
                    ModVec ambient(r, 0);
                    for (size_t t = 0; t < d; ++t)
                        if (kv[t])
                            for (int c = 0; c < r; ++c)
                                ambient[c] = (ambient[c] + kv[t] * W.basis[t][c]) % p;
                    sub.basis.push_back(std::move(ambient));
                }
                mod_rref(sub.basis, sub.pivots, p);
                if (!sub.basis.empty()) next.push_back(std::move(sub));
            }
            progress = true;
        }
        spaces = std::move(next);
        return progress;
    };

    for (int i = 0; i < r; ++i) {
        if (i == idc) continue;
        bool done = true;
        for (auto& W : spaces)
            if (W.basis.size() > 1) { done = false; break; }
        if (done) break;
        split_by(mats[i]);
    }
    // random linear combinations as a fallback splitter
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool done = true;
        for (auto& W : spaces)
            if (W.basis.size() > 1) { done = false; break; }
        if (done) break;
        ModMat M(r, ModVec(r, 0));
        for (int i = 0; i < r; ++i) {
            std::uint64_t c = rng() % p;
            for (int row = 0; row < r; ++row)
                for (int col = 0; col < r; ++col)
                    M[row][col] = (M[row][col] + c * mats[i][row][col]) % p;
        }
        split_by(M);
    }

    // normalized common eigenvectors, verified
    std::vector<ModVec> omegas;
    for (auto& W : spaces) {
        if (W.basis.size() != 1)
            throw std::runtime_error("char_table: splitting left a subspace of dim > 1");
        ModVec v = W.basis[0];
        if (v[idc] == 0) throw std::runtime_error("char_table: eigenvector vanishes at identity");
        std::uint64_t f = inv_mod(v[idc], p);
        for (auto& x : v) x = x * f % p;
        for (int i = 0; i < r; ++i) {
            ModVec u = apply_mat(mats[i], v);
            for (int c = 0; c < r; ++c)
                if (u[c] != v[i] * v[c] % p)
                    throw std::runtime_error("char_table: not a common eigenvector");
        }
        omegas.push_back(std::move(v));
    }
    if (static_cast<int>(omegas.size()) != r)
        throw std::runtime_error("char_table: wrong number of eigenvectors");

    // inverse-class map and class sizes mod p
    std::vector<int> inv_class(r);
    for (int c = 0; c < r; ++c) inv_class[c] = G->class_of[G->inverse(G->class_rep[c])];

    const std::uint64_t z = pow_mod(smallest_primitive_root(p), (p - 1) / e, p); // primitive e-th root

    // precompute classes of powers of each class representative
    std::vector<std::vector<int>> power_class_of_rep(r);
    for (int c = 0; c < r; ++c) {
        int m = G->elem_order[G->class_rep[c]];
        power_class_of_rep[c].resize(m);
        int x = G->id;
        for (int s = 0; s < m; ++s) {
            power_class_of_rep[c][s] = G->class_of[x];
            x = G->mul(x, G->class_rep[c]);
        }
    }

    std::vector<ClassFunction> rows;
    std::vector<long> degrees;
    long sum_deg_sq = 0;
    for (auto& v : omegas) {
        // degree from the second orthogonality of omega values
        std::uint64_t s = 0;
        for (int i = 0; i < r; ++i) {
            std::uint64_t csize = static_cast<std::uint64_t>(G->classes[i].size()) % p;
            s = (s + v[i] * v[inv_class[i]] % p * inv_mod(csize, p)) % p;
        }
        std::uint64_t dsq = static_cast<std::uint64_t>(n) % p * inv_mod(s, p) % p;
        long deg = -1;
        for (std::uint64_t t = 1; 2 * t < p; ++t)
            if (t * t % p == dsq) { deg = static_cast<long>(t); break; }
        if (deg <= 0) throw std::runtime_error("char_table: could not recover a character degree");
        // character values mod p
        ModVec tvals(r);
        for (int i = 0; i < r; ++i) {
            std::uint64_t csize = static_cast<std::uint64_t>(G->classes[i].size()) % p;
            tvals[i] = static_cast<std::uint64_t>(deg) % p * v[i] % p * inv_mod(csize, p) % p;
        }
        // lift each class value to an exact cyclotomic number
        ClassFunction chi{G, std::vector<Cyclo>(r)};
        for (int c = 0; c < r; ++c) {
            int m = G->elem_order[G->class_rep[c]];
            std::uint64_t zm = pow_mod(z, e / m, p);
            std::uint64_t invm = inv_mod(static_cast<std::uint64_t>(m) % p, p);
            Cyclo val(0);
            long mu_total = 0;
            for (int a = 0; a < m; ++a) {
                std::uint64_t acc = 0;
                for (int s = 0; s < m; ++s) {
                    std::uint64_t w = pow_mod(zm, static_cast<std::uint64_t>((m - a % m) % m) * s % m, p);
                    acc = (acc + tvals[power_class_of_rep[c][s]] * w) % p;
                }
                std::uint64_t mu = acc * invm % p;
                if (mu > static_cast<std::uint64_t>(deg))
                    throw std::runtime_error("char_table: eigenvalue multiplicity out of range");
                mu_total += static_cast<long>(mu);
                if (mu) val += Cyclo(Rat(static_cast<long>(mu))) * Cyclo::root_of_unity(m, a);
            }
            if (mu_total != deg)
                throw std::runtime_error("char_table: eigenvalue multiplicities do not sum to the degree");
            chi.values[c] = val;
        }
        if (n % deg != 0) throw std::runtime_error("char_table: degree does not divide the group order");
        sum_deg_sq += deg * deg;
        rows.push_back(std::move(chi));
        degrees.push_back(deg);
    }
    if (sum_deg_sq != n)
        throw std::runtime_error("char_table: degrees squared do not sum to the group order");

    // deterministic order: by degree, the trivial character first, then values
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    auto is_trivial = [&](int i) {
        for (auto& v : rows[i].values)
            if (v != Cyclo(1)) return false;
        return true;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        return rows[a].values < rows[b].values;
    });
    CharTable T;
    T.group = G;
    for (int i : order) {
        T.rows.push_back(std::move(rows[i]));
        T.degrees.push_back(degrees[i]);
    }

    // exact validation: first row trivial, rows orthonormal
    for (auto& v : T.rows[0].values)
        if (v != Cyclo(1)) throw std::runtime_error("char_table: first row is not the trivial character");
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Cyclo ip = inner_product(T.rows[i], T.rows[j]);
            if (ip != Cyclo(i == j ? 1 : 0))
                throw std::runtime_error("char_table: rows are not orthonormal");
        }
    return T;
}

// Permutation character of an explicit left action: value at a class is the
// number of fixed points of its representative. action[g][x] is g*x.
inline ClassFunction perm_character(const GroupPtr& G, const std::vector<std::vector<std::uint16_t>>& action) {
    if (static_cast<int>(action.size()) != G->n)
        throw std::invalid_argument("perm_character: action table has wrong group dimension");
    ClassFunction out{G, std::vector<Cyclo>(G->num_classes())};
    for (int c = 0; c < G->num_classes(); ++c) {
        int g = G->class_rep[c];
        long fixed = 0;
        for (size_t x = 0; x < action[g].size(); ++x)
            if (action[g][x] == x) ++fixed;
        out.values[c] = Cyclo(Rat(fixed));
    }
    return out;
}

} // namespace greenring
