#include "ffl/ybe.hpp"

#include <sstream>
#include <stdexcept>

namespace ffl {

static int mod(int a, int n) { return ((a % n) + n) % n; }

static Poly quot(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero weight");
    return b.is_monomial() ? a * b.pow(-1) : divide_exact(a, b);
}

const Poly* RWeightTable::weight(const DecoratedSpin& tl, const DecoratedSpin& bl, const DecoratedSpin& tr,
                                 const DecoratedSpin& br) const {
    auto ok = [this](const DecoratedSpin& s) { return !s.minus || (s.charge >= 0 && s.charge < n); };
    if (!ok(tl) || !ok(bl) || !ok(tr) || !ok(br)) return nullptr;
    const int minus_left = tl.minus + bl.minus, minus_right = tr.minus + br.minus;
    if (minus_left != minus_right) return nullptr;
    auto k = [](const DecoratedSpin& s) { return static_cast<std::size_t>(s.charge); };
    if (minus_left == 0) return &A1;
    if (minus_left == 2) {
        if (tl == tr && bl == br) return &A2[k(tl)][k(bl)];
        if (tr == bl && tl == br) return &A2x[k(bl)][k(br)];
        return nullptr;
    }
    if (tl.minus && br.minus && !bl.minus && !tr.minus) return tl == br ? &B1[k(tl)] : nullptr;
    if (bl.minus && tr.minus && !tl.minus && !br.minus) return bl == tr ? &B2[k(bl)] : nullptr;
    if (bl.minus && br.minus) return bl == br ? &C1[k(bl)] : nullptr;
    if (tl.minus && tr.minus) return tl == tr ? &C2[k(tl)] : nullptr;
    return nullptr;
}

namespace {

// Row data with charge access mod n.
struct Pair {
    const RowWeights& u;  // row i
    const RowWeights& t;  // row j
    int n;

    const Poly& a2(const RowWeights& r, int a) const { return r.a2[static_cast<std::size_t>(mod(a, n))]; }
    const Poly& b2(const RowWeights& r, int a) const { return r.b2[static_cast<std::size_t>(mod(a, n))]; }
    // a1(i) b2(j)(p) and a1(j) b2(i)(p)
    Poly Pij(int p) const { return u.a1 * b2(t, p); }
    Poly Pji(int p) const { return t.a1 * b2(u, p); }
    Poly prod_ij(int lo, int hi) const {
        Poly r(1);
        for (int p = lo; p <= hi; ++p) r *= Pij(p);
        return r;
    }
    Poly prod_ji(int lo, int hi) const {
        Poly r(1);
        for (int p = lo; p <= hi; ++p) r *= Pji(p);
        return r;
    }
};

Pair make_pair_rows(const VertexWeights& w, std::size_t i, std::size_t j) {
    if (w.orientation != Orientation::delta) throw std::invalid_argument("R-vertex tables need delta weights");
    if (i >= w.N() || j >= w.N() || i == j) throw std::invalid_argument("row pair out of range");
    return Pair{w.rows[i], w.rows[j], w.n};
}

VertexWeights two_rows(const VertexWeights& w, std::size_t i, std::size_t j) {
    VertexWeights s;
    s.orientation = w.orientation;
    s.n = w.n;
    s.rows = {w.rows[i], w.rows[j]};
    return s;
}

void fill_common(RWeightTable& r, const Pair& P) {
    const int n = P.n;
    auto N = static_cast<std::size_t>(n);
    r.A2.assign(N, std::vector<Poly>(N));
    r.A2x.assign(N, std::vector<Poly>(N));
    r.C1.assign(N, Poly(0));
    r.C2.assign(N, Poly(0));
    for (int k = 1; k <= n; ++k) {
        auto kk = static_cast<std::size_t>(mod(k, n));
        r.C1[kk] = P.u.c1 * P.t.c2 * P.prod_ji(1, k - 1) * P.prod_ij(k, n - 1);
        r.C2[kk] = P.t.c1 * P.u.c2 * P.prod_ij(1, k - 1) * P.prod_ji(k, n - 1);
    }
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            if (k == m) continue;
            Poly v;
            if (k < m) {
                v = quot(P.t.c1 * P.t.c2 * P.a2(P.u, 0), P.a2(P.t, 0)) * P.prod_ji(1, m - 1) * P.prod_ij(m, n - 1) *
                    quot(P.prod_ij(0, k - 1), P.prod_ji(0, k - 1));
            } else {
                v = quot(P.t.c1 * P.t.c2 * P.u.b1, P.t.b1) * P.prod_ij(1, k - 1) * P.prod_ji(k, n - 1) *
                    quot(P.prod_ji(0, m - 1), P.prod_ij(0, m - 1));
            }
            r.A2[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = v;
        }
}

}  // namespace

RWeightTable r_weights_free_fermion(const VertexWeights& w, std::size_t i, std::size_t j, bool check) {
    Pair P = make_pair_rows(w, i, j);
    auto rep = free_fermion_check(two_rows(w, i, j));
    if (check && (!rep.zero_charge || !rep.charge_condition || (w.n > 1 && !rep.independence)))
        throw std::invalid_argument("rows do not satisfy the generalized free fermion condition");
    const int n = w.n;
    auto N = static_cast<std::size_t>(n);
    RWeightTable r;
    r.n = n;
    r.i = i;
    r.j = j;
    r.A1 = P.u.a1 * P.a2(P.t, 0) * P.prod_ij(1, n - 1) + P.t.b1 * P.b2(P.u, 0) * P.prod_ji(1, n - 1);
    Poly a2kk = P.t.a1 * P.a2(P.u, 0) * P.prod_ji(1, n - 1) + P.u.b1 * P.b2(P.t, 0) * P.prod_ij(1, n - 1);
    fill_common(r, P);
    Poly b2 = P.prod_ji(0, n - 1) - P.prod_ij(0, n - 1);
    Poly b1 = P.a2(P.t, 0) * P.u.b1 * P.prod_ij(1, n - 1) - P.a2(P.u, 0) * P.t.b1 * P.prod_ji(1, n - 1);
    r.B1.assign(N, b1);
    r.B2.assign(N, b2);
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            auto kk = static_cast<std::size_t>(k), mm = static_cast<std::size_t>(m);
            if (k == m) {
                r.A2[kk][mm] = a2kk;
                r.A2x[kk][mm] = a2kk;
            } else {
                r.A2x[kk][mm] = quot(P.a2(P.u, k - m), P.b2(P.u, k - m)) * b2;
            }
        }
    return r;
}

Poly a2x_alternative(const VertexWeights& w, std::size_t i, std::size_t j, int k, int m) {
    Pair P = make_pair_rows(w, i, j);
    const int n = w.n;
    return quot(P.b2(P.t, m - k), P.a2(P.t, m - k)) *
           (P.a2(P.t, 0) * P.u.b1 * P.prod_ij(1, n - 1) - P.a2(P.u, 0) * P.t.b1 * P.prod_ji(1, n - 1));
}

RWeightTable r_weights_nonff(const VertexWeights& w, std::size_t i, std::size_t j) {
    Pair P = make_pair_rows(w, i, j);
    auto rep = free_fermion_check(two_rows(w, i, j));
    const int n = w.n;
    if (!rep.independence) throw std::invalid_argument("rows do not satisfy the independence condition");
    if (!(P.prod_ij(0, n - 1) == P.prod_ji(0, n - 1)))
        throw std::invalid_argument("rows do not satisfy the charge product equation");
    auto N = static_cast<std::size_t>(n);
    RWeightTable r;
    r.n = n;
    r.i = i;
    r.j = j;
    Poly cc = P.t.c1 * P.t.c2, d = P.t.a1 * P.a2(P.t, 0) + P.t.b1 * P.b2(P.t, 0);
    r.A1 = quot(cc * d, P.t.a1 * P.b2(P.t, 0)) * P.prod_ij(0, n - 1);
    Poly a2kk = quot(cc * (P.u.a1 * P.a2(P.u, 0) + P.u.b1 * P.b2(P.u, 0)), P.u.a1 * P.b2(P.u, 0)) * P.prod_ij(0, n - 1);
    fill_common(r, P);
    for (auto& c : r.C1) c *= d;
    for (auto& c : r.C2) c *= d;
    for (auto& row : r.A2)
        for (auto& c : row) c *= d;
    r.B1.assign(N, Poly(0));
    r.B2.assign(N, Poly(0));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            if (k == m) r.A2[k][m] = a2kk;
            r.A2x[k][m] = k == m ? a2kk : Poly(0);
        }
    return r;
}

std::string YbeCase::str() const {
    std::ostringstream os;
    const char* names[] = {"alpha", "beta", "gamma", "delta", "epsilon", "eta"};
    for (std::size_t e = 0; e < 6; ++e) os << (e ? " " : "") << names[e] << "=" << boundary[e].str();
    return os.str();
}

YbeReport check_ybe(const VertexWeights& w, const RWeightTable& r) {
    if (w.orientation != Orientation::delta) throw std::invalid_argument("YBE check needs delta weights");
    const std::size_t i = r.i, j = r.j;
    std::vector<DecoratedSpin> h{DecoratedSpin::plus()};
    for (int a = 0; a < w.n; ++a) h.push_back(DecoratedSpin::minus_with(a));
    const DecoratedSpin P = DecoratedSpin::plus(), Mv = DecoratedSpin::minus_with(0);
    std::vector<DecoratedSpin> v{P, Mv};
    auto vert = [](const DecoratedSpin& s) { return s.minus; };
    auto T = [&](std::size_t row, const DecoratedSpin& l, const DecoratedSpin& top, const DecoratedSpin& rt,
                 const DecoratedSpin& bot) -> const Poly* {
        return vertex_weight_ltrb(w, row, l, vert(top), rt, vert(bot));
    };
    YbeReport rep;
    for (const auto& al : h)
        for (const auto& be : h)
            for (const auto& ga : v)
                for (const auto& de : h)
                    for (const auto& ep : h)
                        for (const auto& et : v) {
                            int in = de.minus + ep.minus + et.minus, out = al.minus + be.minus + ga.minus;
                            if (in != out) continue;
                            ++rep.cases;
                            Poly lhs(0), rhs(0);
                            for (const auto& X : h)
                                for (const auto& Y : h)
                                    for (const auto& nu : v) {
                                        const Poly* R = r.weight(be, al, X, Y);
                                        const Poly* Ti = R ? T(i, X, ga, de, nu) : nullptr;
                                        const Poly* Tj = Ti ? T(j, Y, nu, ep, et) : nullptr;
                                        if (Tj) lhs += *R * *Ti * *Tj;
                                        const Poly* Tj2 = T(j, be, ga, X, nu);
                                        const Poly* Ti2 = Tj2 ? T(i, al, nu, Y, et) : nullptr;
                                        const Poly* R2 = Ti2 ? r.weight(X, Y, de, ep) : nullptr;
                                        if (R2) rhs += *Tj2 * *Ti2 * *R2;
                                    }
                            if (!(lhs == rhs)) {
                                rep.passed = false;
                                rep.failures.push_back({{al, be, ga, de, ep, et}, lhs, rhs});
                            }
                        }
    return rep;
}

namespace {

struct Frac {
    Poly num, den;
};

Frac fr(const Poly& n, const Poly& d = Poly(1)) { return {n, d}; }

}  // namespace

std::vector<EquationResult> check_appendix_suite(const VertexWeights& w, const RWeightTable& r) {
    Pair P = make_pair_rows(w, r.i, r.j);
    const int n = r.n;
    const RowWeights &u = P.u, &t = P.t;
    auto idx = [n](int k) { return static_cast<std::size_t>(mod(k, n)); };
    auto C1 = [&](int k) { return r.C1[idx(k)]; };
    auto C2 = [&](int k) { return r.C2[idx(k)]; };
    auto B1 = [&](int k) { return r.B1[idx(k)]; };
    auto B2 = [&](int k) { return r.B2[idx(k)]; };
    auto A2 = [&](int k, int m) { return r.A2[idx(k)][idx(m)]; };
    auto A2x = [&](int k, int m) { return r.A2x[idx(k)][idx(m)]; };
    auto a2 = [&](const RowWeights& x, int a) { return P.a2(x, a); };
    auto b2 = [&](const RowWeights& x, int a) { return P.b2(x, a); };

    std::vector<EquationResult> out;
    auto eq = [&](std::string name, const Frac& l, const Frac& rr) {
        Poly res = l.num * rr.den - rr.num * l.den;
        out.push_back({std::move(name), res.is_zero(), res});
    };
    auto K = [](const std::string& s, int k) { return s + "[k=" + std::to_string(k) + "]"; };
    auto KM = [](const std::string& s, int k, int m) {
        return s + "[k=" + std::to_string(k) + ",m=" + std::to_string(m) + "]";
    };

    for (int k = 0; k < n; ++k) {
        eq(K("B1(k)=B1(k+1)", k), fr(B1(k)), fr(B1(k + 1)));
        eq(K("B2(k)=B2(k+1)", k), fr(B2(k)), fr(B2(k + 1)));
    }
    const Poly B1v = B1(0), B2v = B2(0);
    for (int k = 1; k < n; ++k) {
        eq(K("C1(k+1)/C1(k)=a1(j)b2(i)(k)/a1(i)b2(j)(k)", k), fr(C1(k + 1), C1(k)), fr(P.Pji(k), P.Pij(k)));
        eq(K("C1(k+1)/C1(k)=a2(i)(k)b1(j)/a2(j)(k)b1(i)", k), fr(C1(k + 1), C1(k)),
           fr(a2(u, k) * t.b1, a2(t, k) * u.b1));
        eq(K("C2(k+1)/C2(k)=a1(i)b2(j)(k)/a1(j)b2(i)(k)", k), fr(C2(k + 1), C2(k)), fr(P.Pij(k), P.Pji(k)));
        eq(K("C2(k+1)/C2(k)=a2(j)(k)b1(i)/a2(i)(k)b1(j)", k), fr(C2(k + 1), C2(k)),
           fr(a2(t, k) * u.b1, a2(u, k) * t.b1));
    }
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) eq(KM("A2x(k+1,m+1)=A2x(k,m)", k, m), fr(A2x(k + 1, m + 1)), fr(A2x(k, m)));
    for (int m = 1; m < n; ++m) eq(K("A2x(0,m)/B1=b2(j)(m)/a2(j)(m)", m), fr(A2x(0, m), B1v), fr(b2(t, m), a2(t, m)));
    for (int k = 1; k < n; ++k) eq(K("A2x(k,0)/B2=a2(i)(k)/b2(i)(k)", k), fr(A2x(k, 0), B2v), fr(a2(u, k), b2(u, k)));
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            eq(KM("A2(k+1,m+1)/A2(k,m)=b2 ratio", k, m), fr(A2(k + 1, m + 1), A2(k, m)),
               fr(b2(t, k) * b2(u, m), b2(u, k) * b2(t, m)));
            eq(KM("A2(k+1,m+1)/A2(k,m)=a2 ratio", k, m), fr(A2(k + 1, m + 1), A2(k, m)),
               fr(a2(t, k) * a2(u, m), a2(u, k) * a2(t, m)));
        }
    const Poly A2v = A2(0, 0);
    for (int k = 1; k < n; ++k) {
        eq(K("A2(k,0)/C2(k+1)", k), fr(A2(k, 0), C2(k + 1)), fr(a2(u, k) * t.c2, a2(t, k) * u.c2));
        eq(K("A2(k+1,1)/C2(k)", k), fr(A2(k + 1, 1), C2(k)), fr(b2(t, k) * u.c1, b2(u, k) * t.c1));
        eq(K("A2(0,k)/C1(k+1)", k), fr(A2(0, k), C1(k + 1)), fr(b2(t, k) * u.c2, b2(u, k) * t.c2));
        eq(K("A2(1,k+1)/C1(k)", k), fr(A2(1, k + 1), C1(k)), fr(a2(u, k) * t.c1, a2(t, k) * u.c1));
    }
    eq("C2(1)/C1(0)", fr(C2(1), C1(0)), fr(t.c1 * u.c2, u.c1 * t.c2));
    eq("C1(1)/C2(0)", fr(C1(1), C2(0)), fr(u.c1 * t.c2, t.c1 * u.c2));
    eq("C2(1) b2(i)(0) a1(j)", fr(C2(1) * b2(u, 0) * t.a1), fr(b2(t, 0) * u.a1 * C2(0) + t.c1 * u.c2 * B2v));
    eq("C1(1) a1(i) b2(j)(0)", fr(C1(1) * u.a1 * b2(t, 0) + B2v * u.c1 * t.c2), fr(t.a1 * b2(u, 0) * C1(0)));
    eq("C1(1) b1(i) a2(j)(0)", fr(C1(1) * u.b1 * a2(t, 0)), fr(t.b1 * a2(u, 0) * C1(0) + t.c2 * u.c1 * B1v));
    eq("C2(1) a2(i)(0) b1(j)", fr(C2(1) * a2(u, 0) * t.b1 + B1v * u.c2 * t.c1), fr(a2(t, 0) * u.b1 * C2(0)));
    eq("A1 c2(i) a1(j)", fr(r.A1 * u.c2 * t.a1), fr(t.c2 * u.a1 * C2(0) + t.b1 * u.c2 * B2v));
    eq("C1(1) a1(i) c1(j)", fr(C1(1) * u.a1 * t.c1 + B2v * u.c1 * t.b1), fr(t.a1 * u.c1 * r.A1));
    eq("A1 b1(i) c2(j)", fr(r.A1 * u.b1 * t.c2), fr(t.c2 * u.a1 * B1v + t.b1 * u.c2 * C1(0)));
    eq("B1 a1(i) c1(j)", fr(B1v * u.a1 * t.c1 + C2(1) * u.c1 * t.b1), fr(t.c1 * u.b1 * r.A1));
    eq("A2 c1(i) a2(j)(0)", fr(A2v * u.c1 * a2(t, 0)), fr(t.c1 * a2(u, 0) * C1(0) + b2(t, 0) * u.c1 * B1v));
    eq("C2(1) a2(i)(0) c2(j)", fr(C2(1) * a2(u, 0) * t.c2 + B1v * u.c2 * b2(t, 0)), fr(a2(t, 0) * u.c2 * A2v));
    eq("A2 b2(i)(0) c1(j)", fr(A2v * b2(u, 0) * t.c1), fr(b2(t, 0) * u.c1 * C2(0) + t.c1 * a2(u, 0) * B2v));
    eq("C1(1) c2(i) b2(j)(0)", fr(C1(1) * u.c2 * b2(t, 0) + B2v * a2(u, 0) * t.c2), fr(t.c2 * b2(u, 0) * A2v));
    return out;
}

bool all_passed(const std::vector<EquationResult>& eqs) {
    for (const auto& e : eqs)
        if (!e.passed) return false;
    return true;
}

namespace {

Rational rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

std::vector<Rational> random_g(std::mt19937_64& rng, int n) {
    std::vector<Rational> g(static_cast<std::size_t>(n));
    Rational r = rnd(rng);
    g[0] = -r * r;
    for (int a = 1; 2 * a < n; ++a) {
        g[static_cast<std::size_t>(a)] = rnd(rng);
        g[static_cast<std::size_t>(n - a)] = -g[0] / g[static_cast<std::size_t>(a)];
    }
    if (n % 2 == 0 && n > 1) g[static_cast<std::size_t>(n / 2)] = r;
    return g;
}

VertexWeights with_g(std::mt19937_64& rng, int n, std::size_t rows, const std::vector<Rational>& g) {
    VertexWeights w;
    w.n = n;
    for (std::size_t i = 0; i < rows; ++i) {
        RowWeights r;
        Rational a1 = rnd(rng), b1 = rnd(rng), c1 = rnd(rng);
        std::vector<Rational> b2(static_cast<std::size_t>(n)), a2(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            auto aa = static_cast<std::size_t>(a);
            b2[aa] = rnd(rng);
            a2[aa] = n == 1 ? rnd(rng) : Rational(g[aa] * b1 * b2[aa] / a1);
        }
        Rational cc = a1 * a2[0] + b1 * b2[0];
        r.a1 = Poly(a1);
        r.b1 = Poly(b1);
        r.c1 = Poly(c1);
        r.c2 = Poly(Rational(cc / c1));
        for (int a = 0; a < n; ++a) {
            r.a2.push_back(Poly(a2[static_cast<std::size_t>(a)]));
            r.b2.push_back(Poly(b2[static_cast<std::size_t>(a)]));
        }
        w.rows.push_back(std::move(r));
    }
    return w;
}

}  // namespace

VertexWeights random_gff_weights(std::mt19937_64& rng, int n, std::size_t rows) {
    auto g = random_g(rng, n);
    return with_g(rng, n, rows, g);
}

VertexWeights random_charge_broken(std::mt19937_64& rng, int n, std::size_t rows) {
    if (n < 2) throw std::invalid_argument("the charge condition needs n >= 2");
    auto g = random_g(rng, n);
    g[1] *= Rational(3, 2);
    return with_g(rng, n, rows, g);
}

VertexWeights random_identical_rows(std::mt19937_64& rng, int n, std::size_t rows) {
    VertexWeights w;
    w.n = n;
    RowWeights r;
    r.a1 = Poly(rnd(rng));
    r.b1 = Poly(rnd(rng));
    r.c1 = Poly(rnd(rng));
    r.c2 = Poly(rnd(rng));
    for (int a = 0; a < n; ++a) {
        r.a2.push_back(Poly(rnd(rng)));
        r.b2.push_back(Poly(rnd(rng)));
    }
    w.rows.assign(rows, r);
    return w;
}

}  // namespace ffl
