#include "ffl/latticemodel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ffl {

static int mod(int a, int n) { return ((a % n) + n) % n; }

std::string DecoratedSpin::str() const { return minus ? "-" + std::to_string(charge) : "+"; }

RegistryPtr VertexWeights::registry() const {
    for (const auto& r : rows)
        for (const Poly* p : {&r.a1, &r.b1, &r.c1, &r.c2})
            if (p->registry()) return p->registry();
    return nullptr;
}

StandardParams symbolic_params(const RegistryPtr& reg, std::size_t N, int n) {
    StandardParams p;
    for (std::size_t i = 1; i <= N; ++i) {
        std::string s = std::to_string(i);
        p.x.push_back(Poly::var(reg, "x" + s));
        p.y.push_back(Poly::var(reg, "y" + s));
        p.A.push_back(Poly::var(reg, "A" + s));
        p.B.push_back(Poly::var(reg, "B" + s));
    }
    if (n > 1)
        for (int a = 0; a < n; ++a) {
            p.f.push_back(Poly::var(reg, "f" + std::to_string(a)));
            p.h.push_back(Poly::var(reg, "h" + std::to_string(a)));
        }
    return p;
}

VertexWeights standard_weights(WeightKind kind, const StandardParams& p) {
    const bool charged = kind == WeightKind::delta_charged || kind == WeightKind::gamma_charged;
    const int n = charged ? p.n() : 1;
    if (charged && p.h.size() != p.f.size()) throw std::invalid_argument("f and h tables differ in length");
    if (p.y.size() != p.N() || p.A.size() != p.N() || p.B.size() != p.N())
        throw std::invalid_argument("row parameter vectors differ in length");
    auto f = [&](int a) { return charged ? p.f[static_cast<std::size_t>(a)] : Poly(1); };
    auto h = [&](int a) { return charged ? p.h[static_cast<std::size_t>(a)] : Poly(1); };
    VertexWeights w;
    w.n = n;
    for (std::size_t i = 0; i < p.N(); ++i) {
        const Poly &x = p.x[i], &y = p.y[i], &A = p.A[i], &B = p.B[i];
        RowWeights r;
        if (kind == WeightKind::delta || kind == WeightKind::delta_charged) {
            w.orientation = Orientation::delta;
            r.a1 = A;
            r.b1 = A * B;
            r.c1 = (f(0) * x + h(0) * y) * A * B;
            r.c2 = A;
            for (int a = 0; a < n; ++a) {
                r.a2.push_back(h(a) * y * A * B);
                r.b2.push_back(f(a) * x * A);
            }
        } else {
            w.orientation = Orientation::gamma;
            Poly Ai = A.pow(-1), Bi = B.pow(-1);
            r.a1 = Ai;
            r.b1 = Ai * Bi;
            r.c1 = (f(0) * x + h(0) * y) * Ai;
            r.c2 = Ai * Bi;
            for (int a = 0; a < n; ++a) {
                r.a2.push_back(f(a) * x * Ai * Bi);
                r.b2.push_back(h(a) * y * Ai);
            }
        }
        w.rows.push_back(std::move(r));
    }
    return w;
}

const Poly* vertex_weight(const VertexWeights& w, std::size_t row, const DecoratedSpin& left, bool in,
                          const DecoratedSpin& right, bool out) {
    const int n = w.n;
    const RowWeights& r = w.rows[row];
    const bool delta = w.orientation == Orientation::delta;
    auto bad = [n](const DecoratedSpin& s) { return s.minus && (s.charge < 0 || s.charge >= n); };
    if (bad(left) || bad(right)) return nullptr;
    if (!left.minus && !right.minus) {
        if (!in && !out) return &r.a1;
        if (in && out) return &r.b1;
        return nullptr;
    }
    if (left.minus && right.minus) {
        if (in != out) return nullptr;
        int idx;
        if (delta) {
            if (left.charge != mod(right.charge + 1, n)) return nullptr;
            idx = right.charge;
        } else {
            if (right.charge != mod(left.charge + 1, n)) return nullptr;
            idx = left.charge;
        }
        return in ? &r.a2[static_cast<std::size_t>(idx)] : &r.b2[static_cast<std::size_t>(idx)];
    }
    if (left.minus) {
        // the in path turns toward the left
        if (!in || out) return nullptr;
        if (delta) return left.charge == mod(1, n) ? &r.c1 : nullptr;
        return left.charge == 0 ? &r.c2 : nullptr;
    }
    // a path from the right leaves through the out edge
    if (in || !out) return nullptr;
    if (delta) return right.charge == 0 ? &r.c2 : nullptr;
    return right.charge == mod(1, n) ? &r.c1 : nullptr;
}

const Poly* vertex_weight_ltrb(const VertexWeights& w, std::size_t row, const DecoratedSpin& left, bool top,
                               const DecoratedSpin& right, bool bottom) {
    if (w.orientation == Orientation::delta) return vertex_weight(w, row, left, bottom, right, top);
    return vertex_weight(w, row, left, top, right, bottom);
}

void ModelSpec::validate() const {
    if (N() == 0) throw std::invalid_argument("model needs at least one row");
    if (M < 0 || M > 62) throw std::invalid_argument("column bound M out of range");
    if (lambda.largest() > M || mu.largest() > M) throw std::invalid_argument("M must be at least max(λ₁, μ₁)");
    for (const auto* side : {&alpha, &beta})
        for (int p : side->parts())
            if (p < 1 || p > static_cast<int>(N())) throw std::invalid_argument("side boundary parts must lie in [1, N]");
    if (weights.n > 1 && (alpha.length() || beta.length()))
        throw std::invalid_argument("side boundaries are only supported without charge");
    for (const auto& r : weights.rows)
        if (static_cast<int>(r.a2.size()) != weights.n || static_cast<int>(r.b2.size()) != weights.n)
            throw std::invalid_argument("a2/b2 tables must have n entries");
}

ModelSpec make_model(VertexWeights w, int M, StrictPartition lambda, StrictPartition mu, StrictPartition alpha,
                     StrictPartition beta) {
    ModelSpec m{std::move(w), M, std::move(lambda), std::move(mu), std::move(alpha), std::move(beta)};
    m.validate();
    return m;
}

Mask to_mask(const StrictPartition& p) {
    Mask m = 0;
    for (int x : p.parts()) {
        if (x > 63) throw std::out_of_range("part too large for a bit mask");
        m |= Mask{1} << x;
    }
    return m;
}

StrictPartition from_mask(Mask m) {
    Parts p;
    for (int b = 63; b >= 0; --b)
        if (m >> b & 1) p.push_back(b);
    return StrictPartition(p);
}

static std::vector<DecoratedSpin> side_spins(const ModelSpec& m, const StrictPartition& side) {
    std::vector<DecoratedSpin> s(m.N());
    for (int p : side.parts()) s[static_cast<std::size_t>(p - 1)] = DecoratedSpin::minus_with(0);
    return s;
}

static std::vector<DecoratedSpin> spin_candidates(int n) {
    std::vector<DecoratedSpin> c{DecoratedSpin::plus()};
    for (int a = 0; a < n; ++a) c.push_back(DecoratedSpin::minus_with(a));
    return c;
}

namespace {

// Column-by-column depth-first search, right to left, rows in order from the
// λ side. Each cell knows its right and in edges and picks left and out.
class StateWalker {
public:
    StateWalker(const ModelSpec& m, const EnumerationLimits& lim) : m_(m), lim_(lim) {
        m.validate();
        N_ = m.N();
        M_ = m.M;
        lam_ = to_mask(m.lambda);
        mu_ = to_mask(m.mu);
        left_ = side_spins(m, m.beta);
        cands_ = spin_candidates(m.weights.n);
        s_.horizontal.assign(N_, std::vector<DecoratedSpin>(static_cast<std::size_t>(M_) + 2));
        s_.vertical.assign(N_ + 1, std::vector<bool>(static_cast<std::size_t>(M_) + 1));
        auto right = side_spins(m, m.alpha);
        for (std::size_t r = 0; r < N_; ++r) s_.horizontal[r][static_cast<std::size_t>(M_) + 1] = right[r];
        for (int c = 0; c <= M_; ++c) {
            s_.vertical[0][static_cast<std::size_t>(c)] = lam_ >> c & 1;
            s_.vertical[N_][static_cast<std::size_t>(c)] = mu_ >> c & 1;
        }
        path_.assign(N_ * static_cast<std::size_t>(M_ + 1), nullptr);
    }

    void run(const std::function<void(const LatticeState&, const std::vector<const Poly*>&)>& leaf) {
        leaf_ = &leaf;
        cell(M_, 0);
    }

private:
    void cell(int c, std::size_t r) {
        if (c < 0) {
            (*leaf_)(s_, path_);
            return;
        }
        const auto cc = static_cast<std::size_t>(c);
        const bool in = s_.vertical[r][cc];
        const DecoratedSpin right = s_.horizontal[r][cc + 1];
        for (int o = 0; o <= 1; ++o) {
            const bool out = o;
            if (r + 1 == N_ && out != static_cast<bool>(mu_ >> c & 1)) continue;
            for (const auto& left : cands_) {
                if (c == 0 && !(left == left_[r])) continue;
                const Poly* wt = vertex_weight(m_.weights, r, left, in, right, out);
                if (!wt) continue;
                if (++count_ > lim_.max_partial) throw LimitExceeded("state enumeration exceeded the safety limit");
                s_.horizontal[r][cc] = left;
                if (r + 1 < N_) s_.vertical[r + 1][cc] = out;
                path_[(static_cast<std::size_t>(M_) - cc) * N_ + r] = wt;
                if (r + 1 < N_) cell(c, r + 1);
                else cell(c - 1, 0);
            }
        }
    }

    const ModelSpec& m_;
    EnumerationLimits lim_;
    std::size_t N_ = 0;
    int M_ = 0;
    Mask lam_ = 0, mu_ = 0;
    std::vector<DecoratedSpin> left_, cands_;
    LatticeState s_;
    std::vector<const Poly*> path_;
    std::size_t count_ = 0;
    const std::function<void(const LatticeState&, const std::vector<const Poly*>&)>* leaf_ = nullptr;
};

}  // namespace

std::vector<LatticeState> enumerate_states(const ModelSpec& m, const EnumerationLimits& lim) {
    std::vector<LatticeState> out;
    StateWalker walker(m, lim);
    walker.run([&](const LatticeState& s, const std::vector<const Poly*>&) { out.push_back(s); });
    return out;
}

Poly state_weight(const ModelSpec& m, const LatticeState& s) {
    Poly w(1);
    for (std::size_t r = 0; r < m.N(); ++r)
        for (int c = 0; c <= m.M; ++c) {
            auto cc = static_cast<std::size_t>(c);
            const Poly* p = vertex_weight(m.weights, r, s.horizontal[r][cc], s.vertical[r][cc],
                                          s.horizontal[r][cc + 1], s.vertical[r + 1][cc]);
            if (!p) throw std::invalid_argument("state is not admissible");
            w *= *p;
        }
    return w;
}

static Poly brute_Z(const ModelSpec& m, const EnumerationLimits& lim) {
    Poly total(0);
    StateWalker walker(m, lim);
    walker.run([&](const LatticeState&, const std::vector<const Poly*>& path) {
        Poly w(1);
        for (const Poly* p : path) w *= *p;
        total += w;
    });
    return total;
}

std::map<Mask, Poly> row_transfer(const VertexWeights& w, std::size_t row, int M, Mask in,
                                  const DecoratedSpin& right, const std::optional<DecoratedSpin>& left) {
    // (left spin of the current column, out mask so far)
    std::map<std::pair<DecoratedSpin, Mask>, Poly> cur{{{right, 0}, Poly(1)}};
    const auto cands = spin_candidates(w.n);
    for (int c = M; c >= 0; --c) {
        std::map<std::pair<DecoratedSpin, Mask>, Poly> next;
        const bool inb = in >> c & 1;
        for (const auto& [key, coef] : cur) {
            for (int o = 0; o <= 1; ++o)
                for (const auto& l : cands) {
                    const Poly* wt = vertex_weight(w, row, l, inb, key.first, o);
                    if (!wt) continue;
                    Mask om = key.second | (o ? Mask{1} << c : 0);
                    auto [it, fresh] = next.try_emplace({l, om}, coef * *wt);
                    if (!fresh) it->second += coef * *wt;
                }
        }
        cur = std::move(next);
    }
    std::map<Mask, Poly> out;
    for (const auto& [key, coef] : cur) {
        if (left && !(key.first == *left)) continue;
        if (coef.is_zero()) continue;
        auto [it, fresh] = out.try_emplace(key.second, coef);
        if (!fresh) it->second += coef;
    }
    return out;
}

static Poly transfer_Z(const ModelSpec& m) {
    m.validate();
    auto right = side_spins(m, m.alpha), left = side_spins(m, m.beta);
    std::map<Mask, Poly> cur{{to_mask(m.lambda), Poly(1)}};
    for (std::size_t r = 0; r < m.N(); ++r) {
        std::map<Mask, Poly> next;
        for (const auto& [mask, coef] : cur)
            for (const auto& [om, wt] : row_transfer(m.weights, r, m.M, mask, right[r], left[r])) {
                auto [it, fresh] = next.try_emplace(om, coef * wt);
                if (!fresh) it->second += coef * wt;
            }
        cur = std::move(next);
    }
    auto it = cur.find(to_mask(m.mu));
    return it == cur.end() ? Poly(0) : it->second;
}

Poly partition_function(const ModelSpec& m, Method method, const EnumerationLimits& lim) {
    return method == Method::brute ? brute_Z(m, lim) : transfer_Z(m);
}

Poly extended_boundary_Z(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& alpha,
                         const StrictPartition& beta, const VertexWeights& w, int M) {
    return brute_Z(make_model(w, M, lambda, mu, alpha, beta), {});
}

FreeFermionReport free_fermion_check(const VertexWeights& w) {
    FreeFermionReport rep;
    const int n = w.n;
    rep.zero_charge = true;
    rep.charge_condition = true;
    for (const auto& r : w.rows) {
        Poly d = r.a1 * r.a2[0] + r.b1 * r.b2[0] - r.c1 * r.c2;
        if (!d.is_zero()) rep.zero_charge = false;
        rep.delta_numerator.push_back(d);
        for (int a = 1; a < n; ++a) {
            const Poly& ap = r.a2[static_cast<std::size_t>(a)];
            const Poly& am = r.a2[static_cast<std::size_t>(mod(-a, n))];
            const Poly& bp = r.b2[static_cast<std::size_t>(a)];
            const Poly& bm = r.b2[static_cast<std::size_t>(mod(-a, n))];
            if (!(r.a1 * ap * am * r.b2[0] + r.a2[0] * r.b1 * bp * bm).is_zero()) rep.charge_condition = false;
        }
    }
    // a1 a2(k) / (b1 b2(k)), a1 a2(0) / (c1 c2), b1 b2(0) / (c1 c2) equal across rows, cross-multiplied
    rep.independence = true;
    auto same_ratio = [](const Poly& p, const Poly& q, const Poly& r, const Poly& s) { return p * s == q * r; };
    for (std::size_t i = 1; i < w.N(); ++i) {
        const auto& u = w.rows[0];
        const auto& t = w.rows[i];
        for (int k = 0; k < n; ++k) {
            auto kk = static_cast<std::size_t>(k);
            if (!same_ratio(u.a1 * u.a2[kk], u.b1 * u.b2[kk], t.a1 * t.a2[kk], t.b1 * t.b2[kk])) rep.independence = false;
        }
        if (!same_ratio(u.a1 * u.a2[0], u.c1 * u.c2, t.a1 * t.a2[0], t.c1 * t.c2)) rep.independence = false;
        if (!same_ratio(u.b1 * u.b2[0], u.c1 * u.c2, t.b1 * t.b2[0], t.c1 * t.c2)) rep.independence = false;
    }
    return rep;
}

ModelSpec transform_model(const ModelSpec& m, Transform which) {
    m.validate();
    const int n = m.weights.n;
    ModelSpec out = m;
    out.weights.orientation =
        m.weights.orientation == Orientation::delta ? Orientation::gamma : Orientation::delta;
    for (std::size_t i = 0; i < m.N(); ++i) {
        const RowWeights& r = m.weights.rows[i];
        RowWeights& t = out.weights.rows[i];
        if (which == Transform::rotate180) {
            // left and right swap and vertical spins are flipped; charges keep their values
            t.a1 = r.b1;
            t.b1 = r.a1;
            t.a2 = r.b2;
            t.b2 = r.a2;
            t.c1 = r.c1;
            t.c2 = r.c2;
        } else {
            // top and bottom swap; charges a ↦ 1 - a
            t.c1 = r.c2;
            t.c2 = r.c1;
            for (int b = 0; b < n; ++b) {
                t.a2[static_cast<std::size_t>(b)] = r.a2[static_cast<std::size_t>(mod(-b, n))];
                t.b2[static_cast<std::size_t>(b)] = r.b2[static_cast<std::size_t>(mod(-b, n))];
            }
        }
    }
    if (which == Transform::rotate180) {
        out.lambda = complement_reverse(m.lambda, m.M);
        out.mu = complement_reverse(m.mu, m.M);
        std::swap(out.alpha, out.beta);
    }
    return out;
}

VertexWeights rescale_c(const VertexWeights& w, const Poly& theta) {
    VertexWeights out = w;
    for (auto& r : out.rows) {
        r.c1 = r.c1 * theta;
        r.c2 = r.c2 * theta.pow(-1);
    }
    return out;
}

Poly column_restricted_transfer(const VertexWeights& w, int k, const StrictPartition& lambda,
                                const StrictPartition& mu) {
    if (w.orientation != Orientation::delta || w.N() != 1)
        throw std::invalid_argument("column-restricted transfer needs a one-row delta model");
    const int n = w.n;
    const int lo = k - n;
    if (lo < 0) throw std::invalid_argument("window k-n..k must lie in the columns");
    Mask lm = to_mask(lambda), mm = to_mask(mu);
    Mask window = 0;
    for (int c = lo; c <= k; ++c) window |= Mask{1} << c;
    if ((lm & ~window) != (mm & ~window)) return Poly(0);
    const auto cands = spin_candidates(n);
    std::map<std::pair<DecoratedSpin, Mask>, Poly> cur{{{DecoratedSpin::plus(), 0}, Poly(1)}};
    for (int c = k; c >= lo; --c) {
        std::map<std::pair<DecoratedSpin, Mask>, Poly> next;
        const bool inb = lm >> c & 1;
        const bool outb = mm >> c & 1;
        for (const auto& [key, coef] : cur)
            for (const auto& l : cands) {
                const Poly* wt = vertex_weight(w, 0, l, inb, key.first, outb);
                if (!wt) continue;
                auto [it, fresh] = next.try_emplace({l, 0}, coef * *wt);
                if (!fresh) it->second += coef * *wt;
            }
        cur = std::move(next);
    }
    Poly total(0);
    const Poly& open = w.rows[0].b2[0];
    for (const auto& [key, coef] : cur) total += key.first.minus ? coef * open.pow(-1) : coef;
    return total;
}

}  // namespace ffl
