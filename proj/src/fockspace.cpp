#include "ffl/fockspace.hpp"

#include "ffl/symmfunc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ffl {

// --------------------------------------------------------------- MayaState

MayaState::MayaState(StrictPartition p, std::vector<int> h) : particles(std::move(p)), holes(std::move(h)) {
    for (std::size_t i = 0; i < holes.size(); ++i) {
        if (holes[i] >= 0) throw std::invalid_argument("sea hole at nonnegative label");
        if (i && holes[i] >= holes[i - 1]) throw std::invalid_argument("holes not decreasing");
    }
}

bool MayaState::occupied(int label) const {
    if (label >= 0) return particles.contains(label);
    return std::find(holes.begin(), holes.end(), label) == holes.end();
}

int MayaState::occupied_above(int label) const {
    int c = 0;
    for (int p : particles.parts())
        if (p > label) ++c;
    if (label < -1) {
        int vacant = 0;
        for (int h : holes)
            if (h > label) ++vacant;
        c += (-1 - label) - vacant;
    }
    return c;
}

int MayaState::highest_label() const { return particles.length() ? particles[0] : -1; }

int MayaState::label_sum() const {
    int s = particles.size();
    for (int h : holes) s -= h;
    return s;
}

int MayaState::charge() const {
    return static_cast<int>(particles.length()) - static_cast<int>(holes.size());
}

MayaState MayaState::with(int label, bool occ) const {
    if (label >= 0) {
        Parts q = particles.parts();
        if (occ) {
            q.push_back(label);
            std::sort(q.rbegin(), q.rend());
        } else {
            q.erase(std::find(q.begin(), q.end(), label));
        }
        return MayaState(StrictPartition(q), holes);
    }
    std::vector<int> h = holes;
    if (occ) {
        h.erase(std::find(h.begin(), h.end(), label));
    } else {
        h.push_back(label);
        std::sort(h.rbegin(), h.rend());
    }
    return MayaState(particles, h);
}

bool MayaState::operator<(const MayaState& o) const {
    if (!(particles == o.particles)) {
        if (particles.size() != o.particles.size()) return particles.size() < o.particles.size();
        return particles.parts() < o.particles.parts();
    }
    return holes < o.holes;
}

std::string MayaState::str() const {
    if (holes.empty()) return particles.str();
    std::ostringstream os;
    os << particles.str() << "/holes(";
    for (std::size_t i = 0; i < holes.size(); ++i) os << (i ? "," : "") << holes[i];
    os << ")";
    return os.str();
}

// -------------------------------------------------------------- FockVector

FockVector::FockVector(const MayaState& s, Poly c) { add(s, c); }

void FockVector::add(const MayaState& s, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m_.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

Poly FockVector::coefficient(const MayaState& s) const {
    auto it = m_.find(s);
    return it == m_.end() ? Poly(0) : it->second;
}

bool FockVector::hole_free() const {
    for (const auto& [s, c] : m_)
        if (!s.hole_free()) return false;
    return true;
}

FockVector FockVector::project_hole_free() const {
    FockVector r;
    for (const auto& [s, c] : m_)
        if (s.hole_free()) r.m_.emplace(s, c);
    return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.m_) add(s, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [s, c] : o.m_) add(s, -c);
    return *this;
}

FockVector FockVector::scaled(const Poly& c) const {
    FockVector r;
    for (const auto& [s, v] : m_) r.add(s, v * c);
    return r;
}

std::string FockVector::str() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : m_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")|" << s.str() << ">";
    }
    return os.str();
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

// ---------------------------------------------------------------- fermions

FockVector apply_psi_star(int label, const FockVector& v) {
    FockVector r;
    for (const auto& [s, c] : v.terms()) {
        if (s.occupied(label)) continue;
        int sign = s.occupied_above(label) % 2 ? -1 : 1;
        r.add(s.with(label, true), sign > 0 ? c : -c);
    }
    return r;
}

FockVector apply_psi(int label, const FockVector& v) {
    FockVector r;
    for (const auto& [s, c] : v.terms()) {
        if (!s.occupied(label)) continue;
        int sign = s.occupied_above(label) % 2 ? -1 : 1;
        r.add(s.with(label, false), sign > 0 ? c : -c);
    }
    return r;
}

Poly vacuum_pairing(const StrictPartition& bra, const FockVector& v) {
    if (!v.hole_free()) throw PairingError("pairing a vector that still carries sea holes");
    return v.coefficient(MayaState(bra));
}

static void add_Jk_terms(int k, const MayaState& s, const Poly& c, FockVector& out) {
    // targets are vacant labels; the source sits k above the target
    std::vector<int> targets = s.holes;
    int top = s.highest_label() + std::abs(k) + 1;
    for (int t = 0; t <= top; ++t)
        if (!s.particles.contains(t)) targets.push_back(t);
    for (int t : targets) {
        int src = t + k;
        if (!s.occupied(src)) continue;
        int sg = s.occupied_above(src);
        MayaState mid = s.with(src, false);
        sg += mid.occupied_above(t);
        out.add(mid.with(t, true), sg % 2 ? -c : c);
    }
}

FockVector apply_Jk(int k, const FockVector& v) {
    if (k == 0) throw std::invalid_argument("J_0 is not a current operator here");
    FockVector r;
    for (const auto& [s, c] : v.terms()) add_Jk_terms(k, s, c, r);
    return r;
}

// ---------------------------------------------------------- Hamiltonians

const Poly& HamiltonianParams::coeff(std::size_t row, int k) const {
    if (k < 1 || k > K) throw std::out_of_range("Hamiltonian degree bound K too small");
    return s.at(row).at(static_cast<std::size_t>(k - 1));
}

std::vector<Poly> HamiltonianParams::summed() const {
    std::vector<Poly> out(static_cast<std::size_t>(K), Poly(0));
    for (const auto& row : s)
        for (int k = 1; k <= K; ++k) out[static_cast<std::size_t>(k - 1)] += row.at(static_cast<std::size_t>(k - 1));
    return out;
}

HamiltonianParams HamiltonianParams::single_row(std::size_t row) const {
    HamiltonianParams h;
    h.sign = sign;
    h.K = K;
    h.s = {s.at(row)};
    return h;
}

FockVector apply_exp_phi(const HamiltonianParams& H, std::size_t row, const FockVector& v,
                         int max_degree) {
    if (max_degree < 0) return FockVector();
    if (max_degree > H.K) throw std::out_of_range("Hamiltonian degree bound K too small");
    int sgn = H.sign == Sign::plus ? 1 : -1;
    // d V_d = Σ_k k s_k J_{±k} V_{d-k}
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

// With a target ⟨μ|, a hole-free state can only reach μ if it dominates μ part
// by part (H+) or is dominated by it (H-).
static bool can_reach(const MayaState& s, const StrictPartition& target, int sgn) {
    if (!s.hole_free()) return true;
    const auto& p = s.particles;
    if (p.length() != target.length()) return false;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (sgn * (p[i] - target[i]) < 0) return false;
    return true;
}

static FockVector prune_displacement(const FockVector& v, int base, int sgn, int max_disp, bool drop_holes,
                                     const StrictPartition* target) {
    FockVector r;
    for (const auto& [s, c] : v.terms()) {
        int disp = sgn * (base - s.label_sum());
        if (disp < 0 || disp > max_disp) continue;
        if (drop_holes && !s.hole_free()) continue;
        if (target && !can_reach(s, *target, sgn)) continue;
        r.add(s, c);
    }
    return r;
}

static FockVector exp_H_impl(const HamiltonianParams& H, const FockVector& v, int degree, bool drop_holes,
                             const StrictPartition* target = nullptr) {
    if (degree < 0) return FockVector();
    int sgn = H.sign == Sign::plus ? 1 : -1;
    FockVector out;
    // handle each input basis vector with its own displacement budget
    for (const auto& [s0, c0] : v.terms()) {
        int base = s0.label_sum();
        FockVector cur(s0, c0);
        for (std::size_t j = 0; j < H.rows() && !cur.is_zero(); ++j) {
            int used_min = degree;
            for (const auto& [s, c] : cur.terms()) used_min = std::min(used_min, sgn * (base - s.label_sum()));
            cur = apply_exp_phi(H, j, cur, degree - used_min);
            cur = prune_displacement(cur, base, sgn, degree, drop_holes, target);
        }
        for (const auto& [s, c] : cur.terms())
            if (sgn * (base - s.label_sum()) == degree) out.add(s, c);
    }
    return out;
}

FockVector apply_exp_H(const HamiltonianParams& H, const FockVector& v, int degree) {
    return exp_H_impl(H, v, degree, false);
}

Poly tau_function(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H) {
    Poly zero(0);
    if (lam.length() != mu.length()) return zero;
    int degree = H.sign == Sign::plus ? lam.size() - mu.size() : mu.size() - lam.size();
    if (degree < 0) return zero;
    if (degree > H.K) throw std::out_of_range("Hamiltonian degree bound K too small");
    // J_{-k} never refills a sea hole from above, so hole states are dropped early
    FockVector r = exp_H_impl(H, FockVector(MayaState(lam)), degree, H.sign == Sign::minus, &mu);
    return r.project_hole_free().coefficient(MayaState(mu));
}

Poly wick_tau(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H) {
    if (lam.length() != mu.length()) return Poly(0);
    SymParams sp{H.summed()};
    std::size_t l = lam.length();
    PolyMatrix m(l, std::vector<Poly>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            int d = H.sign == Sign::plus ? lam[i] - mu[j] : mu[i] - lam[j];
            m[i][j] = d < 0 ? Poly(0) : gen_h(sp, d);
        }
    return det(m);
}

FockVector apply_Uk_Dk(UD which, int k, const FockVector& v) {
    FockVector out;
    int sgn = which == UD::U ? -1 : 1;
    for (const auto& mu : partitions_of(k)) {
        FockVector w = v;
        for (int part : mu.parts()) w = apply_Jk(sgn * part, w);
        out += w.scaled(Poly(1 / z_lambda(mu)));
    }
    return out;
}

BoundaryResult boundary_operator(BoundaryCase c, const HamiltonianParams& H, std::size_t row,
                                 const Poly& x_plus_y, int M, const FockVector& v, int max_degree) {
    if (H.sign != Sign::plus) throw std::invalid_argument("boundary operators use e^{H+}");
    const int top = M + 1;  // site M + 1/2
    const int ghost = -1;   // site -3/2
    BoundaryResult r{FockVector(), Poly(1)};
    FockVector w = v;
    switch (c) {
        case BoundaryCase::A:
            r.numerator = apply_exp_phi(H, row, w, max_degree);
            return r;
        case BoundaryCase::B:
            if (x_plus_y.is_zero()) throw AlgebraError("ghost vertex weight x+y vanishes");
            r.numerator = apply_exp_phi(H, row, apply_psi_star(top, w), max_degree);
            r.denominator = x_plus_y;
            return r;
        case BoundaryCase::C:
            w = apply_exp_phi(H, row, apply_psi(ghost, w), max_degree);
            r.numerator = apply_psi_star(ghost, apply_psi(ghost, w));
            return r;
        case BoundaryCase::D:
            if (x_plus_y.is_zero()) throw AlgebraError("ghost vertex weight x+y vanishes");
            w = apply_exp_phi(H, row, apply_psi_star(top, apply_psi(ghost, w)), max_degree);
            r.numerator = apply_psi_star(ghost, apply_psi(ghost, w));
            r.denominator = x_plus_y;
            return r;
    }
    return r;
}

}  // namespace ffl
