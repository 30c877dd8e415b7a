#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffl/fockspace.hpp"
#include "ffl/latticemodel.hpp"
#include "ffl/qfock.hpp"
#include "ffl/symmfunc.hpp"

#include <random>

using namespace ffl;

namespace {

StrictPartition sp(Parts p) { return StrictPartition(std::move(p)); }

Poly scale(const StandardParams& p, int M, std::size_t len) {
    Poly r(1);
    for (std::size_t i = 0; i < p.N(); ++i) r *= p.A[i].pow(M + 1) * p.B[i].pow(static_cast<int>(len));
    return r;
}

std::vector<std::pair<StrictPartition, StrictPartition>> grid(int max_part, std::size_t max_len) {
    std::vector<std::pair<StrictPartition, StrictPartition>> out;
    for (const auto& lam : enumerate_strict(max_part, {.max_length = max_len}))
        for (const auto& mu : enumerate_strict(max_part, {.length = lam.length()})) out.emplace_back(lam, mu);
    return out;
}

// charged family with y = x, h = g f
StandardParams charged_ff(const RegistryPtr& reg, std::size_t N, const GFunction& g) {
    auto p = symbolic_params(reg, N, g.n);
    for (std::size_t i = 0; i < N; ++i) p.y[i] = p.x[i];
    for (int a = 0; a < g.n; ++a) p.h[static_cast<std::size_t>(a)] = g.at(a) * p.f[static_cast<std::size_t>(a)];
    return p;
}

}  // namespace

TEST_CASE("small partition functions") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 1);
    Poly x = p.x[0], y = p.y[0], A = p.A[0], B = p.B[0];
    auto w = standard_weights(WeightKind::delta, p);
    auto m = make_model(w, 2, sp({2}), sp({0}));
    CHECK(partition_function(m) == (x + y) * x * A.pow(3) * B);
    CHECK(partition_function(m, Method::brute) == partition_function(m));
    CHECK(enumerate_states(m).size() == 1);
    for (const auto& lam : enumerate_strict(3)) {
        auto mm = make_model(w, 3, lam, lam);
        CHECK(partition_function(mm) == A.pow(4) * B.pow(static_cast<int>(lam.length())));
        CHECK(enumerate_states(mm).size() == 1);
    }
    CHECK(enumerate_states(make_model(w, 3, sp({2, 1}), sp({0}))).empty());
    CHECK(partition_function(make_model(w, 3, sp({2, 1}), sp({0}))).is_zero());
}

TEST_CASE("state weights multiply to the partition function") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    auto w = standard_weights(WeightKind::gamma, p);
    auto m = make_model(w, 3, sp({3, 1}), sp({1, 0}));
    Poly total(0);
    for (const auto& s : enumerate_states(m)) total += state_weight(m, s);
    CHECK(total == partition_function(m));
    CHECK_FALSE(total.is_zero());
}

TEST_CASE("validation and limits") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    auto w = standard_weights(WeightKind::delta, p);
    CHECK_THROWS_AS(make_model(w, 2, sp({3}), sp({0})), std::invalid_argument);
    CHECK_THROWS_AS(make_model(w, 3, sp({1}), sp({0}), sp({3})), std::invalid_argument);
    auto m = make_model(w, 5, sp({5, 3, 1}), sp({4, 2, 0}));
    CHECK_THROWS_AS(partition_function(m, Method::brute, {.max_partial = 5}), LimitExceeded);
    CHECK_THROWS_AS(enumerate_states(m, {.max_partial = 5}), LimitExceeded);
    CHECK(from_mask(to_mask(sp({5, 3, 0}))) == sp({5, 3, 0}));
}

TEST_CASE("brute force and transfer agree") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    for (auto kind : {WeightKind::delta, WeightKind::gamma}) {
        auto w = standard_weights(kind, p);
        for (const auto& [lam, mu] : grid(3, 2)) {
            auto m = make_model(w, 3, lam, mu);
            CHECK(partition_function(m, Method::brute) == partition_function(m, Method::transfer));
        }
        for (const auto& al : {sp({}), sp({1}), sp({2, 1})})
            for (const auto& be : {sp({}), sp({2}), sp({2, 1})})
                for (const auto& lam : enumerate_strict(2)) {
                    if (lam.length() + al.length() < be.length()) continue;
                    std::size_t len = lam.length() + al.length() - be.length();
                    for (const auto& mu : enumerate_strict(3, {.length = len})) {
                        auto m = make_model(w, 3, lam, mu, al, be);
                        CHECK(partition_function(m, Method::brute) == extended_boundary_Z(lam, mu, al, be, w, 3));
                        CHECK(partition_function(m, Method::brute) == partition_function(m));
                    }
                }
    }
    auto g = standard_g(reg, 2);
    auto cw = standard_weights(WeightKind::delta_charged, charged_ff(reg, 2, g));
    for (const auto& [lam, mu] : grid(4, 2)) {
        auto m = make_model(cw, 4, lam, mu);
        CHECK(partition_function(m, Method::brute) == partition_function(m));
    }
}

TEST_CASE("classical match on a small grid") {
    auto reg = make_registry();
    for (std::size_t N = 1; N <= 2; ++N) {
        auto p = symbolic_params(reg, N);
        SuperAlphabet a{p.x, p.y};
        HamiltonianParams Hp, Hm;
        Hp.K = Hm.K = 12;
        Hp.s = supersymmetric_row_params(a, 12);
        Hm.s = supersymmetric_row_params(a.swapped(), 12);
        Hm.sign = Sign::minus;
        auto wd = standard_weights(WeightKind::delta, p), wg = standard_weights(WeightKind::gamma, p);
        const int M = 3;
        for (const auto& [lam, mu] : grid(M, 3)) {
            CHECK(partition_function(make_model(wd, M, lam, mu)) == scale(p, M, lam.length()) * tau_function(mu, lam, Hp));
            CHECK(partition_function(make_model(wg, M, lam, mu)) * scale(p, M, lam.length()) == tau_function(lam, mu, Hm));
        }
    }
}

TEST_CASE("vicious and osculating walkers") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        p.y[i] = Poly(0);
        p.A[i] = p.B[i] = Poly(1);
    }
    SuperAlphabet xs{p.x, {Poly(0), Poly(0)}};
    auto wd = standard_weights(WeightKind::delta, p), wg = standard_weights(WeightKind::gamma, p);
    for (const auto& [lam, mu] : grid(3, 2)) {
        Partition l = rho_minus(lam), m = rho_minus(mu);
        Poly s = contained(m, l) ? supersym_schur(l, m, xs, SchurRoute::tableaux) : Poly(0);
        CHECK(partition_function(make_model(wd, 3, lam, mu)) == s);
        Poly t = contained(m, l) ? supersym_schur(conjugate(l), conjugate(m), xs, SchurRoute::tableaux) : Poly(0);
        CHECK(partition_function(make_model(wg, 3, lam, mu)) == t);
    }
}

TEST_CASE("charged single path") {
    auto reg = make_registry();
    for (int n = 2; n <= 3; ++n) {
        auto p = symbolic_params(reg, 1, n);
        p.A[0] = p.B[0] = Poly(1);
        auto w = standard_weights(WeightKind::delta_charged, p);
        Poly want = (p.f[0] * p.x[0] + p.h[0] * p.y[0]) * p.x[0].pow(n - 1);
        for (int a = 1; a < n; ++a) want *= p.f[static_cast<std::size_t>(a)];
        CHECK(partition_function(make_model(w, n, sp({n}), sp({0}))) == want);
        // a shorter distance cannot be travelled
        CHECK(partition_function(make_model(w, n, sp({n - 1}), sp({0}))).is_zero());
    }
}

TEST_CASE("charged match at n = 2") {
    auto reg = make_registry();
    auto g = standard_g(reg, 2);
    const int n = 2, M = 4, K = 4;
    auto p = charged_ff(reg, 1, g);
    Poly x = p.x[0], F = p.f[0] * p.f[1], Hh = p.h[0] * p.h[1];
    HamiltonianParams Hp, Hm;
    Hp.K = Hm.K = K;
    Hm.sign = Sign::minus;
    std::vector<Poly> r, rm;
    for (int k = 1; k <= K; ++k) {
        int sg = k % 2 ? 1 : -1;
        r.push_back((x.pow(n * k) * F.pow(k) + (g.at(0).pow(k) * x.pow(n * k) * F.pow(k)).scaled(sg)).scaled(Rational(1, k)));
        rm.push_back((x.pow(n * k) * Hh.pow(k) + (g.at(0).pow(-k) * x.pow(n * k) * Hh.pow(k)).scaled(sg)).scaled(Rational(1, k)));
    }
    Hp.s.push_back(r);
    Hm.s.push_back(rm);
    QFock Fd(g), Fg(g.starred());
    auto wd = standard_weights(WeightKind::delta_charged, p), wg = standard_weights(WeightKind::gamma_charged, p);
    for (const auto& [lam, mu] : grid(M, 3)) {
        CHECK(partition_function(make_model(wd, M, lam, mu)) == scale(p, M, lam.length()) * Fd.q_tau(mu, lam, Hp));
        CHECK(partition_function(make_model(wg, M, lam, mu)) * scale(p, M, lam.length()) == Fg.q_tau(lam, mu, Hm));
    }
}

TEST_CASE("free fermion checks") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    auto r = free_fermion_check(standard_weights(WeightKind::delta, p));
    CHECK(r.zero_charge);
    CHECK(r.charge_condition);
    CHECK_FALSE(r.independence);
    CHECK(free_fermion_check(standard_weights(WeightKind::gamma, p)).zero_charge);

    auto g = standard_g(reg, 2);
    auto cp = charged_ff(reg, 2, g);
    auto rc = free_fermion_check(standard_weights(WeightKind::delta_charged, cp));
    CHECK(rc.zero_charge);
    CHECK(rc.charge_condition);
    CHECK(rc.independence);
    auto bad = cp;
    bad.y = symbolic_params(reg, 2).y;
    auto rb = free_fermion_check(standard_weights(WeightKind::delta_charged, bad));
    CHECK(rb.zero_charge);
    CHECK_FALSE(rb.charge_condition);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(1, 50);
    VertexWeights w;
    w.rows.resize(1);
    for (Poly* q : {&w.rows[0].a1, &w.rows[0].b1, &w.rows[0].c1, &w.rows[0].c2}) *q = Poly(Rational(d(rng), d(rng)));
    w.rows[0].a2 = {Poly(Rational(d(rng), d(rng)))};
    w.rows[0].b2 = {Poly(Rational(d(rng), d(rng)))};
    auto rr = free_fermion_check(w);
    CHECK_FALSE(rr.zero_charge);
    CHECK_FALSE(rr.delta_numerator[0].is_zero());
}

TEST_CASE("transformations preserve the partition function") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    auto wd = standard_weights(WeightKind::delta, p);
    auto wg = standard_weights(WeightKind::gamma, p);
    const int M = 3;
    for (const auto& [lam, mu] : grid(M, 2)) {
        auto m = make_model(wd, M, lam, mu);
        Poly Z = partition_function(m);
        for (auto t : {Transform::rotate180, Transform::vertical_flip}) {
            auto tm = transform_model(m, t);
            CHECK(tm.weights.orientation == Orientation::gamma);
            CHECK(partition_function(tm) == Z);
            auto back = transform_model(tm, t);
            CHECK(back.lambda == m.lambda);
            CHECK(back.mu == m.mu);
            CHECK(partition_function(back) == Z);
        }
        // the rotated standard model is a rescaled standard gamma model
        auto rot = transform_model(m, Transform::rotate180);
        Poly Zg = partition_function(make_model(wg, M, rot.lambda, rot.mu));
        Poly s(1);
        for (std::size_t i = 0; i < 2; ++i) s *= p.A[i].pow(2 * M + 2) * p.B[i].pow(M + 1);
        CHECK(Zg * s == Z);
    }
    auto m = make_model(wd, 3, sp({2}), sp({1}), sp({1}), sp({2}));
    CHECK(partition_function(transform_model(m, Transform::rotate180), Method::brute) == partition_function(m, Method::brute));
}

TEST_CASE("charged vertical flip") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 1, 2);
    auto w = standard_weights(WeightKind::delta_charged, p);
    for (const auto& [lam, mu] : grid(4, 2)) {
        auto m = make_model(w, 4, lam, mu);
        CHECK(partition_function(transform_model(m, Transform::vertical_flip)) == partition_function(m));
    }
}

TEST_CASE("c rescaling") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    Poly t = Poly::var(reg, "t");
    auto w = standard_weights(WeightKind::delta, p);
    auto ws = rescale_c(w, t);
    for (const auto& [lam, mu] : grid(3, 2))
        CHECK(partition_function(make_model(w, 3, lam, mu)) == partition_function(make_model(ws, 3, lam, mu)));
    // with a side boundary the c vertices no longer pair up
    CHECK_FALSE(extended_boundary_Z(sp({}), sp({1}), sp({1}), sp({}), w, 2) ==
                extended_boundary_Z(sp({}), sp({1}), sp({1}), sp({}), ws, 2));
}

TEST_CASE("column restricted transfer") {
    auto reg = make_registry();
    auto g = standard_g(reg, 2);
    auto p = charged_ff(reg, 1, g);
    p.A[0] = p.B[0] = Poly(1);
    auto w = standard_weights(WeightKind::delta_charged, p);
    Poly gamma = Poly(1) + g.at(0);
    for (int k = 2; k <= 4; ++k) {
        CHECK(column_restricted_transfer(w, k, sp({}), sp({})) == Poly(1));
        CHECK(column_restricted_transfer(w, k, sp({k}), sp({k})) == Poly(1));
        CHECK(column_restricted_transfer(w, k, sp({k - 2}), sp({})) == gamma);
        CHECK(column_restricted_transfer(w, k, sp({k + 1}), sp({})).is_zero());
    }
    CHECK_THROWS(column_restricted_transfer(w, 1, sp({}), sp({})));
}
