#include "ffl/qfock.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffl {

static int mod(int a, int n) { return ((a % n) + n) % n; }

const Poly& GFunction::at(int a) const { return g.at(static_cast<std::size_t>(mod(a, n))); }

GFunction GFunction::starred() const {
    GFunction r;
    r.n = n;
    if (!v.is_monomial()) throw AlgebraError("starred space needs a monomial v");
    r.v = v.pow(-1);
    for (int a = 0; a < n; ++a) {
        const Poly& ga = at(a);
        if (!ga.is_monomial()) throw AlgebraError("starred space needs monomial g values");
        r.g.push_back(ga.pow(-1));
    }
    return r;
}

GFunction standard_g(const RegistryPtr& reg, int n, const Poly& twist) {
    if (n < 1) throw std::invalid_argument("modulus n must be positive");
    Poly q = Poly::var(reg, "q");
    GFunction g;
    g.n = n;
    g.v = q * q;
    g.g.assign(static_cast<std::size_t>(n), Poly(0));
    g.g[0] = -(q * q);
    // pair a with n - a: g(a) g(-a) = q²
    for (int a = 1; a < n; ++a) {
        int b = n - a;
        if (a < b) {
            g.g[static_cast<std::size_t>(a)] = twist * q;
            g.g[static_cast<std::size_t>(b)] = q * twist.pow(-1);
        } else if (a == b) {
            g.g[static_cast<std::size_t>(a)] = q;
        }
    }
    return g;
}

bool validate_g(const GFunction& g) {
    if (g.n < 1 || static_cast<int>(g.g.size()) != g.n) return false;
    if (!(g.g[0] == -g.v)) return false;
    for (int a = 1; a < g.n; ++a)
        if (!(g.at(a) * g.at(-a) == -g.at(0))) return false;
    return true;
}

bool is_normally_ordered(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] <= w[i + 1]) return false;
    return true;
}

// ------------------------------------------------------------ Straightener

Straightener::Straightener(GFunction g) : g_(std::move(g)) {
    if (!validate_g(g_)) throw std::invalid_argument("g table fails g(a)g(-a) = -g(0)");
}

std::vector<std::pair<std::pair<int, int>, Poly>> Straightener::pair_rule(int l, int m) const {
    std::vector<std::pair<std::pair<int, int>, Poly>> out;
    const int n = g_.n;
    if (l == m) return out;
    if (mod(m - l, n) == 0) {
        out.push_back({{m, l}, Poly(-1)});
        return out;
    }
    const Poly& glm = g_.at(l - m);
    out.push_back({{m, l}, glm});
    const int i = mod(m - l, n);
    Poly base = g_.v - Poly(1);
    Poly vpow(1);
    for (int s = 0;; ++s) {
        int d = s * n + i;
        if (m - d <= l + d) break;
        out.push_back({{m - d, l + d}, base * vpow});
        d = (s + 1) * n;
        if (m - d <= l + d) break;
        out.push_back({{m - d, l + d}, base * vpow * glm});
        vpow *= g_.v;
    }
    return out;
}

WordCombination Straightener::normal_order(const Word& w) { return reduce(w, true, 0); }

WordCombination Straightener::normal_order_rightmost(const Word& w) {
    // independent of the memo so that the two strategies are not conflated
    WordCombination result;
    std::map<Word, Poly> pending{{w, Poly(1)}};
    std::size_t guard = 0;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word cur = it->first;
        Poly c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        int pos = -1;
        for (int p = static_cast<int>(cur.size()) - 2; p >= 0; --p)
            if (cur[static_cast<std::size_t>(p)] <= cur[static_cast<std::size_t>(p) + 1]) {
                pos = p;
                break;
            }
        if (pos < 0) {
            auto [rt, fresh] = result.try_emplace(cur, c);
            if (!fresh) {
                rt->second += c;
                if (rt->second.is_zero()) result.erase(rt);
            }
            continue;
        }
        auto p = static_cast<std::size_t>(pos);
        for (const auto& [pr, coef] : pair_rule(cur[p], cur[p + 1])) {
            Word nw = cur;
            nw[p] = pr.first;
            nw[p + 1] = pr.second;
            auto [pt, fresh] = pending.try_emplace(nw, c * coef);
            if (!fresh) pt->second += c * coef;
        }
        if (++guard > 50000000) throw std::runtime_error("straightening did not terminate");
    }
    return result;
}

std::size_t Straightener::cache_size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.size();
}

WordCombination Straightener::reduce(const Word& w, bool leftmost, int depth) {
    if (depth > 100000) throw std::runtime_error("straightening did not terminate");
    std::size_t pos = w.size();
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] <= w[p + 1]) {
            pos = p;
            break;
        }
    if (pos == w.size()) return {{w, Poly(1)}};
    if (w[pos] == w[pos + 1]) return {};
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    WordCombination out;
    for (const auto& [pr, coef] : pair_rule(w[pos], w[pos + 1])) {
        Word nw = w;
        nw[pos] = pr.first;
        nw[pos + 1] = pr.second;
        for (const auto& [word, c] : reduce(nw, leftmost, depth + 1)) {
            auto [it, fresh] = out.try_emplace(word, c * coef);
            if (!fresh) {
                it->second += c * coef;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(w, out);
    return out;
}

// ------------------------------------------------------------------ states

Word materialize(const MayaState& s, int bottom) {
    Word w(s.particles.parts().begin(), s.particles.parts().end());
    for (int t = -1; t >= bottom; --t)
        if (s.occupied(t)) w.push_back(t);
    return w;
}

MayaState dematerialize(const Word& w, int bottom) {
    Parts parts;
    std::vector<int> holes;
    std::size_t i = 0;
    for (; i < w.size() && w[i] >= 0; ++i) parts.push_back(w[i]);
    int expect = -1;
    for (; i < w.size(); ++i) {
        if (w[i] < bottom) throw std::logic_error("word entry below materialized bottom");
        while (expect > w[i]) holes.push_back(expect--);
        --expect;
    }
    while (expect >= bottom) holes.push_back(expect--);
    return MayaState(StrictPartition(parts), holes);
}

// ------------------------------------------------------------------- QFock

QFock::QFock(GFunction g, int extra) : st(std::make_shared<Straightener>(std::move(g))), extra_depth(extra) {
    if (extra_depth < 0) extra_depth = 2 * st->g().n + 2;
}

static int lowest_relevant(const MayaState& s) {
    int lo = -1;
    for (int h : s.holes) lo = std::min(lo, h);
    return lo;
}

FockVector QFock::apply_Jk(int k, const FockVector& v) const {
    if (k == 0) throw std::invalid_argument("J_0 is not a current operator here");
    const int shift = k * n();
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        int bottom = lowest_relevant(s) - std::abs(shift) - extra_depth;
        Word w = materialize(s, bottom);
        for (std::size_t p = 0; p < w.size(); ++p) {
            Word nw = w;
            nw[p] -= shift;
            if (nw[p] < bottom) continue;
            for (const auto& [word, coef] : st->normal_order(nw)) out.add(dematerialize(word, bottom), c * coef);
        }
    }
    return out;
}

FockVector QFock::apply_psi_star(int label, const FockVector& v) const {
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        int bottom = std::min(lowest_relevant(s), label) - extra_depth - n();
        Word w = materialize(s, bottom);
        w.insert(w.begin(), label);
        for (const auto& [word, coef] : st->normal_order(w)) out.add(dematerialize(word, bottom), c * coef);
    }
    return out;
}

FockVector QFock::apply_exp_phi(const HamiltonianParams& H, std::size_t row, const FockVector& v,
                                int max_degree) const {
    if (max_degree < 0) return FockVector();
    if (max_degree > H.K) throw std::out_of_range("Hamiltonian degree bound K too small");
    int sgn = H.sign == Sign::plus ? 1 : -1;
    std::vector<FockVector> V{v};
    FockVector total = v;
    for (int d = 1; d <= max_degree; ++d) {
        FockVector acc;
        for (int k = 1; k <= d; ++k) {
            const Poly& sk = H.coeff(row, k);
            if (sk.is_zero() || V[static_cast<std::size_t>(d - k)].is_zero()) continue;
            acc += apply_Jk(sgn * k, V[static_cast<std::size_t>(d - k)]).scaled(sk.scaled(k));
        }
        acc = acc.scaled(Poly(Rational(1, d)));
        total += acc;
        V.push_back(std::move(acc));
    }
    return total;
}

FockVector QFock::apply_exp_H(const HamiltonianParams& H, const FockVector& v, int degree) const {
    if (degree < 0) return FockVector();
    int sgn = H.sign == Sign::plus ? 1 : -1;
    const int nn = n();
    FockVector out;
    for (const auto& [s0, c0] : v.terms()) {
        int base = s0.label_sum();
        auto disp = [&](const MayaState& s) { return sgn * (base - s.label_sum()) / nn; };
        FockVector cur(s0, c0);
        for (std::size_t j = 0; j < H.rows() && !cur.is_zero(); ++j) {
            int used = degree;
            for (const auto& [s, c] : cur.terms()) used = std::min(used, disp(s));
            cur = apply_exp_phi(H, j, cur, degree - used);
            FockVector pruned;
            for (const auto& [s, c] : cur.terms())
                if (disp(s) <= degree) pruned.add(s, c);
            cur = std::move(pruned);
        }
        for (const auto& [s, c] : cur.terms())
            if (disp(s) == degree) out.add(s, c);
    }
    return out;
}

Poly QFock::q_tau(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H) const {
    if (lam.length() != mu.length()) return Poly(0);
    int diff = H.sign == Sign::plus ? lam.size() - mu.size() : mu.size() - lam.size();
    if (diff < 0 || diff % n() != 0) return Poly(0);
    int degree = diff / n();
    if (degree > H.K) throw std::out_of_range("Hamiltonian degree bound K too small");
    FockVector r = apply_exp_H(H, FockVector(MayaState(lam)), degree);
    return r.coefficient(MayaState(mu));
}

Poly QFock::heisenberg_constant(int k) const {
    int a = std::abs(k);
    Poly sum(0);
    for (int t = 0; t < n(); ++t) sum += g().v.pow(t * a);
    return sum.scaled(k);
}

bool rho_star_conjugation_check(const QFock& F, int k, const Poly& zeta, const Poly& tau,
                                const HamiltonianParams& H, const std::vector<StrictPartition>& basis) {
    const int n = F.n();
    for (const auto& lam : basis) {
        FockVector v{MayaState(lam)};
        FockVector rz = F.apply_psi_star(k, v) - F.apply_psi_star(k - n, v).scaled(zeta);
        int top = lam.size() + std::max(k, k - n) + 1;
        int maxdeg = std::max(0, top / n + 2);
        FockVector lhs = F.apply_exp_phi(H, 0, rz, std::min(maxdeg, H.K));
        FockVector ev = F.apply_exp_phi(H, 0, v, std::min(maxdeg, H.K));
        FockVector rhs = F.apply_psi_star(k, ev) - F.apply_psi_star(k - n, ev).scaled(tau);
        for (const auto& mu : basis) {
            if (mu.length() != lam.length() + 1) continue;
            if (!(lhs.coefficient(MayaState(mu)) == rhs.coefficient(MayaState(mu)))) return false;
        }
    }
    return true;
}

}  // namespace ffl
