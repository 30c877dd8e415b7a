#include "ffl/symmfunc.hpp"

#include "ffl/fockspace.hpp"
#include "ffl/qfock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ffl {

const Poly& SymParams::at(int k) const {
    if (k < 1 || k > K()) throw std::out_of_range("symmetric function degree beyond supplied s_k");
    return s[static_cast<std::size_t>(k - 1)];
}

Poly gen_p(const SymParams& s, int k) { return s.at(k).scaled(k); }

static Poly p_lambda(const SymParams& s, const Partition& lam) {
    Poly r(1);
    for (int part : lam.parts()) r *= gen_p(s, part);
    return r;
}

Poly gen_h(const SymParams& s, int k) {
    if (k < 0) return Poly(0);
    if (k == 0) return Poly(1);
    Poly r(0);
    for (const auto& lam : partitions_of(k)) r += p_lambda(s, lam).scaled(1 / z_lambda(lam));
    return r;
}

Poly gen_e(const SymParams& s, int k) {
    if (k < 0) return Poly(0);
    if (k == 0) return Poly(1);
    Poly r(0);
    for (const auto& lam : partitions_of(k)) {
        Rational c = 1 / z_lambda(lam);
        if ((lam.size() - static_cast<int>(lam.length())) % 2) c = -c;
        r += p_lambda(s, lam).scaled(c);
    }
    return r;
}

Poly gen_h_recursive(const SymParams& s, int k) {
    if (k < 0) return Poly(0);
    std::vector<Poly> h{Poly(1)};
    for (int d = 1; d <= k; ++d) {
        Poly acc(0);
        for (int r = 1; r <= d; ++r) acc += gen_p(s, r) * h[static_cast<std::size_t>(d - r)];
        h.push_back(acc.scaled(Rational(1, d)));
    }
    return h[static_cast<std::size_t>(k)];
}

SymParams omega(const SymParams& s) {
    SymParams r = s;
    for (int k = 2; k <= s.K(); k += 2) r.s[static_cast<std::size_t>(k - 1)] = -r.s[static_cast<std::size_t>(k - 1)];
    return r;
}

static Poly jt_det(const Partition& lam, const Partition& mu, const std::function<Poly(int)>& f) {
    std::size_t l = std::max(lam.length(), mu.length());
    PolyMatrix m(l, std::vector<Poly>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            int d = lam[i] - mu[j] - static_cast<int>(i) + static_cast<int>(j);
            m[i][j] = d < 0 ? Poly(0) : f(d);
        }
    return det(m);
}

Poly sigma_skew(const Partition& lam, const Partition& mu, const SymParams& s) {
    std::vector<Poly> cache;
    auto h = [&](int d) {
        while (static_cast<int>(cache.size()) <= d) cache.push_back(gen_h(s, static_cast<int>(cache.size())));
        return cache[static_cast<std::size_t>(d)];
    };
    return jt_det(lam, mu, h);
}

Poly sigma_skew_dual(const Partition& lam, const Partition& mu, const SymParams& s) {
    std::vector<Poly> cache;
    auto e = [&](int d) {
        while (static_cast<int>(cache.size()) <= d) cache.push_back(gen_e(s, static_cast<int>(cache.size())));
        return cache[static_cast<std::size_t>(d)];
    };
    return jt_det(conjugate(lam), conjugate(mu), e);
}

SuperAlphabet make_alphabet(const RegistryPtr& reg, std::size_t N, const std::string& xname,
                            const std::string& yname) {
    SuperAlphabet a;
    for (std::size_t i = 1; i <= N; ++i) {
        a.x.push_back(Poly::var(reg, xname + std::to_string(i)));
        a.y.push_back(Poly::var(reg, yname + std::to_string(i)));
    }
    return a;
}

std::vector<std::vector<Poly>> supersymmetric_row_params(const SuperAlphabet& a, int K) {
    if (a.x.size() != a.y.size()) throw std::invalid_argument("alphabet lengths differ");
    std::vector<std::vector<Poly>> rows;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<Poly> r;
        for (int k = 1; k <= K; ++k) {
            Poly y = a.y[j].pow(k);
            r.push_back((a.x[j].pow(k) + (k % 2 ? y : -y)).scaled(Rational(1, k)));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

SymParams supersymmetric_params(const SuperAlphabet& a, int K) {
    SymParams s;
    s.s.assign(static_cast<std::size_t>(K), Poly(0));
    for (const auto& row : supersymmetric_row_params(a, K))
        for (int k = 0; k < K; ++k) s.s[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)];
    return s;
}

// Fillings with 1 < ... < N < 1' < ... < N', weakly increasing along rows and
// columns, unprimed entries strict down columns, primed entries strict along rows.
static Poly tableaux_sum(const Partition& lam, const Partition& mu, const SuperAlphabet& a) {
    const int N = static_cast<int>(a.size());
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lam.length(); ++r)
        for (int c = mu[r]; c < lam[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    std::map<std::pair<int, int>, int> fill;  // value 0..2N-1; ≥ N means primed
    Poly total(0);
    std::function<void(std::size_t, Poly)> rec = [&](std::size_t idx, Poly w) {
        if (idx == cells.size()) {
            total += w;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 0;
        auto left = fill.find({r, c - 1});
        if (left != fill.end()) lo = std::max(lo, left->second >= N ? left->second + 1 : left->second);
        auto up = fill.find({r - 1, c});
        if (up != fill.end()) lo = std::max(lo, up->second >= N ? up->second : up->second + 1);
        for (int v = lo; v < 2 * N; ++v) {
            fill[{r, c}] = v;
            rec(idx + 1, w * (v < N ? a.x[static_cast<std::size_t>(v)] : a.y[static_cast<std::size_t>(v - N)]));
        }
        fill.erase({r, c});
    };
    if (!contained(mu, lam)) return total;
    rec(0, Poly(1));
    return total;
}

Poly supersym_schur(const Partition& lam, const Partition& mu, const SuperAlphabet& a, SchurRoute route) {
    std::size_t l = std::max(lam.length(), mu.length());
    Partition L = lam.padded(l), Mu = mu.padded(l);
    switch (route) {
        case SchurRoute::tableaux:
            return tableaux_sum(L, Mu, a);
        case SchurRoute::jacobi_trudi: {
            int K = std::max(1, L.size() + static_cast<int>(l));
            return sigma_skew(L, Mu, supersymmetric_params(a, K));
        }
        case SchurRoute::hamiltonian: {
            HamiltonianParams H;
            H.sign = Sign::plus;
            H.K = std::max(1, L.size());
            H.s = supersymmetric_row_params(a, H.K);
            return tau_function(rho_plus(Mu), rho_plus(L), H);
        }
    }
    return Poly(0);
}

Poly supersym_schur_bialternant(const Partition& lam, const SuperAlphabet& a) {
    const std::size_t N = a.size();
    if (lam.trimmed().length() > N) throw std::invalid_argument("bialternant needs at most N parts");
    Partition L = lam.trimmed().padded(N);
    auto factorial_power = [&](const Poly& x, int r) {
        Poly p(1);
        for (int k = 0; k < r; ++k) p *= x + (static_cast<std::size_t>(k) < N ? a.y[static_cast<std::size_t>(k)] : Poly(0));
        return p;
    };
    auto alternant = [&](const Partition& shape) {
        PolyMatrix m(N, std::vector<Poly>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                m[i][j] = factorial_power(a.x[i], shape[j] + static_cast<int>(N - 1 - j));
        return det(m);
    };
    return divide_exact(alternant(L), alternant(Partition(Parts(N, 0))));
}

Poly llt_polynomial(const Partition& lam, const Partition& mu, const SuperAlphabet& a, int n, const GFunction& g) {
    if (g.n != n) throw std::invalid_argument("g table modulus differs from n");
    if (!validate_g(g)) throw std::invalid_argument("invalid g table");
    std::size_t l = std::max(lam.length(), mu.length());
    Partition L = lam.padded(l), Mu = mu.padded(l);
    int diff = L.size() - Mu.size();
    if (diff < 0 || diff % n) return Poly(0);
    HamiltonianParams H;
    H.sign = Sign::plus;
    H.K = std::max(1, diff / n);
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<Poly> r;
        for (int k = 1; k <= H.K; ++k)
            r.push_back((a.x[j].pow(n * k) - a.y[j].pow(n * k)).scaled(Rational(1, k)));
        H.s.push_back(std::move(r));
    }
    QFock F(g);
    return F.q_tau(rho_plus(Mu), rho_plus(L), H);
}

}  // namespace ffl
