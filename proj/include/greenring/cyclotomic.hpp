#pragma once

/**
 * Exact cyclotomic numbers.
 *
 * A value is stored as a coefficient vector over the power basis
 * 1, w, ..., w^(phi(n)-1) of Q(w_n), reduced modulo the n-th cyclotomic
 * polynomial. The conductor n is kept minimal: after every operation the
 * value is rewritten into the smallest cyclotomic field containing it
 * (and n is never 2 mod 4, since Q(w_2m) = Q(w_m) for odd m). Equality
 * is therefore plain structural comparison.
 */

#include <complex>
#include <map>
#include <mutex>
#include <ostream>
#include <vector>

#include "numtheory.hpp"
#include "rational.hpp"

namespace greenring {

namespace detail {

// Dense integer polynomials, low degree first.
using IPoly = std::vector<BigInt>;

inline void ipoly_trim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, requires divisor monic and remainder zero.
inline IPoly ipoly_div_exact(IPoly num, const IPoly& den) {
    IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
    while (num.size() >= den.size() && !num.empty()) {
        BigInt c = num.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ipoly_trim(num);
    }
    if (!num.empty()) throw std::runtime_error("ipoly_div_exact: nonzero remainder");
    return q;
}

struct CycloTables {
    std::map<long, IPoly> cyclo_poly;                    // Phi_n
    std::map<long, std::vector<std::vector<BigInt>>> pow_rep; // x^k mod Phi_n for k < n

    const IPoly& phi_poly(long n) {
        auto it = cyclo_poly.find(n);
        if (it != cyclo_poly.end()) return it->second;
        // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
        IPoly num(n + 1, BigInt(0));
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors(n))
            if (d < n) num = ipoly_div_exact(num, phi_poly(d));
        return cyclo_poly.emplace(n, std::move(num)).first->second;
    }

    const std::vector<std::vector<BigInt>>& power_reps(long n) {
        auto it = pow_rep.find(n);
        if (it != pow_rep.end()) return it->second;
        const IPoly& phi = phi_poly(n);
        long deg = static_cast<long>(phi.size()) - 1; // = euler_phi(n)
        std::vector<std::vector<BigInt>> reps(n, std::vector<BigInt>(deg, BigInt(0)));
        for (long k = 0; k < n; ++k) {
            if (k < deg) {
                reps[k][k] = 1;
            } else {
                // x * reps[k-1], reduced by the monic Phi_n
                std::vector<BigInt> v(deg + 1, BigInt(0));
                for (long i = 0; i < deg; ++i) v[i + 1] = reps[k - 1][i];
                BigInt lead = v[deg];
                for (long i = 0; i < deg; ++i) reps[k][i] = v[i] - lead * phi[i];
            }
        }
        return pow_rep.emplace(n, std::move(reps)).first->second;
    }
};

inline CycloTables& cyclo_tables() {
    static CycloTables t;
    return t;
}

inline std::mutex& cyclo_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

// n-th cyclotomic polynomial as integer coefficients, constant term first.
inline std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
    return detail::cyclo_tables().phi_poly(n);
}

class Cyclo {
public:
    Cyclo() : n_(1), c_{Rat(0)} {}
    Cyclo(const Rat& r) : n_(1), c_{r} {}
    Cyclo(long v) : n_(1), c_{Rat(v)} {}
    Cyclo(int v) : n_(1), c_{Rat(v)} {}

    // w_n^k, reduced to minimal conductor.
    static Cyclo root_of_unity(long n, long k = 1) {
        if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
        k %= n;
        if (k < 0) k += n;
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        auto& tables = detail::cyclo_tables();
        const auto& reps = tables.power_reps(n);
        Cyclo out;
        out.n_ = n;
        out.c_.assign(reps[k].begin(), reps[k].end());
        out.reduce_locked();
        return out;
    }

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const { return n_ == 1 && c_[0] == 0; }
    bool is_rational() const { return n_ == 1; }
    Rat rational_value() const {
        if (n_ != 1) throw std::invalid_argument("cyclotomic value is not rational");
        return c_[0];
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        long m = std::lcm(a.n_, b.n_);
        Cyclo x = a.embedded_locked(m), y = b.embedded_locked(m);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        x.reduce_locked();
        return x;
    }

    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        long m = std::lcm(a.n_, b.n_);
        Cyclo x = a.embedded_locked(m), y = b.embedded_locked(m);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        x.reduce_locked();
        return x;
    }

    Cyclo operator-() const {
        Cyclo x = *this;
        for (auto& v : x.c_) v = -v;
        return x;
    }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        long m = std::lcm(a.n_, b.n_);
        Cyclo x = a.embedded_locked(m), y = b.embedded_locked(m);
        long deg = static_cast<long>(x.c_.size());
        std::vector<Rat> prod(2 * deg - 1, Rat(0));
        for (long i = 0; i < deg; ++i) {
            if (x.c_[i] == 0) continue;
            for (long j = 0; j < deg; ++j) {
                if (y.c_[j] == 0) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        const auto& reps = detail::cyclo_tables().power_reps(m);
        Cyclo out;
        out.n_ = m;
        out.c_.assign(deg, Rat(0));
        for (long k = 0; k < 2 * deg - 1; ++k) {
            if (prod[k] == 0) continue;
            if (k < deg) {
                out.c_[k] += prod[k];
            } else {
                const auto& rep = reps[k % m]; // w^k = w^(k mod m)
                for (long i = 0; i < deg; ++i)
                    if (rep[i] != 0) out.c_[i] += prod[k] * Rat(rep[i]);
            }
        }
        out.reduce_locked();
        return out;
    }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Total order for deterministic sorting, no arithmetic meaning.
    friend bool operator<(const Cyclo& a, const Cyclo& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    // Image under w_n -> w_n^j; requires gcd(j, conductor) = 1.
    Cyclo galois(long j) const {
        long jm = ((j % n_) + n_) % n_;
        if (n_ == 1) return *this;
        if (std::gcd(jm, n_) != 1)
            throw std::invalid_argument("galois: index not coprime to conductor");
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        const auto& reps = detail::cyclo_tables().power_reps(n_);
        Cyclo out;
        out.n_ = n_;
        out.c_.assign(c_.size(), Rat(0));
        for (size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0) continue;
            const auto& rep = reps[(jm * static_cast<long>(t)) % n_];
            for (size_t i = 0; i < c_.size(); ++i)
                if (rep[i] != 0) out.c_[i] += c_[t] * Rat(rep[i]);
        }
        out.reduce_locked();
        return out;
    }

    Cyclo conjugate() const { return galois(n_ - 1); }

    // Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    Cyclo inverse() const {
        if (is_zero()) throw std::invalid_argument("inverse of zero");
        if (n_ == 1) {
            Cyclo out;
            out.c_[0] = Rat(1) / c_[0];
            return out;
        }
        std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
        using RPoly = std::vector<Rat>;
        auto trim = [](RPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
        auto divmod = [&](RPoly a, const RPoly& b, RPoly& q) {
            q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
            while (a.size() >= b.size() && !a.empty()) {
                Rat c = a.back() / b.back();
                size_t shift = a.size() - b.size();
                q[shift] = c;
                for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
                trim(a);
            }
            return a;
        };
        const auto& phi = detail::cyclo_tables().phi_poly(n_);
        RPoly r0(phi.size());
        for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
        RPoly r1(c_);
        trim(r1);
        RPoly s0{}, s1{Rat(1)}; // coefficients of this^(-1) mod Phi
        while (!r1.empty()) {
            RPoly q;
            RPoly r2 = divmod(r0, r1, q);
            // s2 = s0 - q*s1
            RPoly qs(q.size() + s1.size(), Rat(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            RPoly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        // r0 is the gcd, a nonzero constant since Phi_n is irreducible
        if (r0.size() != 1) throw std::runtime_error("cyclo inverse: unexpected gcd degree");
        Cyclo out;
        out.n_ = n_;
        out.c_.assign(c_.size(), Rat(0));
        for (size_t i = 0; i < s0.size() && i < out.c_.size(); ++i) out.c_[i] = s0[i] / r0[0];
        out.reduce_locked();
        return out;
    }

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double tau = 6.283185307179586476925286766559;
        for (size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0) continue;
            double v = static_cast<double>(numerator(c_[t])) / static_cast<double>(denominator(c_[t]));
            double ang = tau * static_cast<double>(t) / static_cast<double>(n_);
            acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclo& a) {
        if (a.n_ == 1) return os << a.c_[0];
        os << "cyclo(" << a.n_ << ";";
        for (size_t i = 0; i < a.c_.size(); ++i) os << (i ? "," : " ") << a.c_[i];
        return os << ")";
    }

private:
    long n_;
    std::vector<Rat> c_; // length phi(n_)

    // Rewrites into conductor m (n_ | m). Caller holds the table mutex.
    Cyclo embedded_locked(long m) const {
        if (m == n_) return *this;
        const auto& reps = detail::cyclo_tables().power_reps(m);
        long deg = static_cast<long>(reps[0].size());
        Cyclo out;
        out.n_ = m;
        out.c_.assign(deg, Rat(0));
        long step = m / n_;
        for (size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0) continue;
            const auto& rep = reps[(step * static_cast<long>(t)) % m];
            for (long i = 0; i < deg; ++i)
                if (rep[i] != 0) out.c_[i] += c_[t] * Rat(rep[i]);
        }
        return out;
    }

    // Applies w -> w^j at the current conductor without reducing. Caller holds the mutex.
    std::vector<Rat> galois_raw_locked(long j) const {
        const auto& reps = detail::cyclo_tables().power_reps(n_);
        std::vector<Rat> out(c_.size(), Rat(0));
        for (size_t t = 0; t < c_.size(); ++t) {
            if (c_[t] == 0) continue;
            const auto& rep = reps[(j * static_cast<long>(t)) % n_];
            for (size_t i = 0; i < c_.size(); ++i)
                if (rep[i] != 0) out[i] += c_[t] * Rat(rep[i]);
        }
        return out;
    }

    // Rewrites to the minimal conductor. Caller holds the table mutex.
    void reduce_locked() {
        if (n_ == 1) return;
        bool allzero = true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) { allzero = false; break; }
        if (allzero) {
            Rat v = c_[0];
            n_ = 1;
            c_.assign(1, v);
            return;
        }
        auto divs = divisors(n_);
        for (long d : divs) {
            if (d == n_) break;
            if (d % 4 == 2) continue; // Q(w_d) = Q(w_{d/2}), already tested
            bool fixed = true;
            for (long j : units_mod(n_)) {
                if (j % d != 1 % d) continue;
                if (j == 1) continue;
                if (galois_raw_locked(j) != c_) { fixed = false; break; }
            }
            if (fixed) {
                rewrite_locked(d);
                return;
            }
        }
        if (n_ % 4 == 2)
            throw std::runtime_error("cyclo reduce: conductor 2 mod 4 survived");
    }

    // Solves for coordinates over the conductor-d power basis; requires the
    // value to lie in Q(w_d). Caller holds the mutex.
    void rewrite_locked(long d) {
        auto& tables = detail::cyclo_tables();
        const auto& reps = tables.power_reps(n_);
        long degN = static_cast<long>(c_.size());
        long degD = static_cast<long>(tables.power_reps(d)[0].size());
        long step = n_ / d;
        // columns: embedding of w_d^s, s < degD; augmented with the value
        std::vector<std::vector<Rat>> m(degN, std::vector<Rat>(degD + 1, Rat(0)));
        for (long s = 0; s < degD; ++s) {
            const auto& rep = reps[(step * s) % n_];
            for (long i = 0; i < degN; ++i) m[i][s] = Rat(rep[i]);
        }
        for (long i = 0; i < degN; ++i) m[i][degD] = c_[i];
        // Gaussian elimination
        std::vector<Rat> sol(degD, Rat(0));
        long row = 0;
        std::vector<long> pivot_of_col(degD, -1);
        for (long col = 0; col < degD && row < degN; ++col) {
            long pr = -1;
            for (long r = row; r < degN; ++r)
                if (m[r][col] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(m[pr], m[row]);
            Rat inv = Rat(1) / m[row][col];
            for (long cc = col; cc <= degD; ++cc) m[row][cc] *= inv;
            for (long r = 0; r < degN; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (long cc = col; cc <= degD; ++cc) m[r][cc] -= f * m[row][cc];
            }
            pivot_of_col[col] = row;
            ++row;
        }
        for (long r = row; r < degN; ++r)
            if (m[r][degD] != 0)
                throw std::runtime_error("cyclo rewrite: inconsistent system (value not in subfield)");
        for (long col = 0; col < degD; ++col) {
            if (pivot_of_col[col] < 0)
                throw std::runtime_error("cyclo rewrite: basis not independent");
            sol[col] = m[pivot_of_col[col]][degD];
        }
        n_ = d;
        c_ = std::move(sol);
        if (n_ == 1 && c_.empty()) c_.assign(1, Rat(0));
    }
};

inline Cyclo cyclo_galois(const Cyclo& a, long j) { return a.galois(j); }

} // namespace greenring
