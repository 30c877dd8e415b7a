#pragma once

#include "ffl/exactpoly.hpp"
#include "ffl/fockspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ffl {

// Twist function on ℤ/n together with the deformation parameter v (= q²
// for the ordinary space, q^{-2} for the starred space).
struct GFunction {
    int n = 1;
    Poly v;
    std::vector<Poly> g;  // g[a], 0 ≤ a < n

    const Poly& at(int a) const;
    // Space matched by the starred charged model: v ↦ 1/v and g ↦ 1/g at the
    // same index. With starred charges read right to left this is 1/g(-a).
    // Every g(a) must be a monomial.
    GFunction starred() const;
};

// g(0) = -q² and g(a) = `twist`^{±1}-style tables used by the standard models:
// n = 2: g(1) = q; n = 3: g(1) = c q, g(2) = q / c with c the supplied monomial.
GFunction standard_g(const RegistryPtr& reg, int n, const Poly& twist = Poly(1));

bool validate_g(const GFunction& g);

using Word = std::vector<int>;
using WordCombination = std::map<Word, Poly>;

// Straightens finite wedge words. Memoizes per instance; thread safe.
class Straightener {
public:
    explicit Straightener(GFunction g);

    const GFunction& g() const { return g_; }

    // one rewrite of the adjacent pair (l, m), l < m, into normally ordered pairs
    std::vector<std::pair<std::pair<int, int>, Poly>> pair_rule(int l, int m) const;

    // leftmost out-of-order adjacent pair first
    WordCombination normal_order(const Word& w);
    // reduce the rightmost out-of-order pair first; used for confluence checks
    WordCombination normal_order_rightmost(const Word& w);

    std::size_t cache_size() const;

private:
    WordCombination reduce(const Word& w, bool leftmost, int depth);

    GFunction g_;
    mutable std::mutex mu_;
    std::map<Word, WordCombination> cache_;
};

bool is_normally_ordered(const Word& w);

// Every occupied label ≥ bottom of the state, decreasing.
Word materialize(const MayaState& s, int bottom);
// Inverse of materialize for a strictly decreasing word whose sea below `bottom` is full.
MayaState dematerialize(const Word& w, int bottom);

struct QFock {
    explicit QFock(GFunction g, int extra_depth = -1);

    const GFunction& g() const { return st->g(); }
    int n() const { return st->g().n; }

    // J_k displaces one wedge factor by -k n, then straightens.
    FockVector apply_Jk(int k, const FockVector& v) const;
    // creation ψ*_k: prepend u_k and straighten
    FockVector apply_psi_star(int label, const FockVector& v) const;

    FockVector apply_exp_phi(const HamiltonianParams& H, std::size_t row, const FockVector& v,
                             int max_degree) const;
    // total degree (displacement / n) exactly `degree`
    FockVector apply_exp_H(const HamiltonianParams& H, const FockVector& v, int degree) const;

    Poly q_tau(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H) const;

    // k (1 - v^{n|k|}) / (1 - v^{|k|})
    Poly heisenberg_constant(int k) const;

    std::shared_ptr<Straightener> st;
    int extra_depth;  // tail entries materialized beyond the displacement
};

// Checks e^{H+} ρ*_k(ζ) e^{-H+} = ρ*_k(τ) on matrix elements ⟨μ| · |λ⟩ for λ, μ in
// `basis`, where ρ*_k(t) = ψ*_k - t ψ*_{k-n}. Equivalently
// e^{H+} ρ*_k(ζ) |λ⟩ = ρ*_k(τ) e^{H+} |λ⟩.
bool rho_star_conjugation_check(const QFock& F, int k, const Poly& zeta, const Poly& tau,
                                const HamiltonianParams& H, const std::vector<StrictPartition>& basis);

}  // namespace ffl
