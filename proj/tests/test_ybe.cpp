#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffl/qfock.hpp"
#include "ffl/ybe.hpp"

using namespace ffl;

namespace {

Rational rq(std::mt19937_64& g) {
    std::uniform_int_distribution<int> d(1, 9);
    Rational q(d(g), d(g));
    q.canonicalize();
    return q;
}

// two distinct rows with the independence condition and the charge product equation
VertexWeights nonff_pair(std::mt19937_64& rng, int n) {
    auto N = static_cast<std::size_t>(n);
    RowWeights a;
    a.a1 = Poly(rq(rng));
    a.b1 = Poly(rq(rng));
    a.c1 = Poly(rq(rng));
    a.c2 = Poly(rq(rng));
    for (int p = 0; p < n; ++p) {
        a.a2.push_back(Poly(rq(rng)));
        a.b2.push_back(Poly(rq(rng)));
    }
    Rational s = rq(rng), r = rq(rng), pr = 1, sn = 1;
    std::vector<Rational> t(N);
    for (std::size_t p = 1; p < N; ++p) {
        t[p] = rq(rng);
        pr *= t[p];
    }
    for (int p = 0; p < n; ++p) sn *= s;
    t[0] = sn / pr;
    RowWeights b;
    b.a1 = a.a1 * Poly(s);
    b.b1 = a.b1 * Poly(r);
    for (std::size_t p = 0; p < N; ++p) {
        b.b2.push_back(a.b2[p] * Poly(t[p]));
        b.a2.push_back(a.a2[p] * Poly(Rational(r * t[p] / s)));
    }
    b.c1 = Poly(rq(rng));
    b.c2 = divide_exact(a.c1 * a.c2 * Poly(Rational(r * t[0])), b.c1);
    VertexWeights w;
    w.n = n;
    w.rows = {a, b};
    return w;
}

bool mentions(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("free fermion R-weights at n = 1") {
    auto reg = make_registry();
    auto p = symbolic_params(reg, 2);
    auto w = standard_weights(WeightKind::delta, p);
    auto r = r_weights_free_fermion(w, 0, 1);
    const auto &u = w.rows[0], &t = w.rows[1];
    CHECK(r.A1 == u.a1 * t.a2[0] + t.b1 * u.b2[0]);
    CHECK(r.A2[0][0] == t.a1 * u.a2[0] + u.b1 * t.b2[0]);
    CHECK(r.B1[0] == t.a2[0] * u.b1 - u.a2[0] * t.b1);
    CHECK(r.B2[0] == t.a1 * u.b2[0] - u.a1 * t.b2[0]);
    CHECK(r.C1[0] == u.c1 * t.c2);
    CHECK(r.C2[0] == t.c1 * u.c2);

    auto rep = check_ybe(w, r);
    CHECK(rep.passed);
    CHECK(rep.cases == 20);
    auto eqs = check_appendix_suite(w, r);
    CHECK(all_passed(eqs));
}

TEST_CASE("free fermion R-weights symbolic at n = 2") {
    auto reg = make_registry();
    auto g = standard_g(reg, 2);
    auto p = symbolic_params(reg, 2, 2);
    for (std::size_t i = 0; i < 2; ++i) p.y[i] = p.x[i];
    for (std::size_t a = 0; a < 2; ++a) p.h[a] = g.at(static_cast<int>(a)) * p.f[a];
    auto w = standard_weights(WeightKind::delta_charged, p);
    auto r = r_weights_free_fermion(w, 0, 1);
    CHECK(check_ybe(w, r).passed);
    CHECK(all_passed(check_appendix_suite(w, r)));
    CHECK(a2x_alternative(w, 0, 1, 1, 0) == r.A2x[1][0]);
    CHECK(a2x_alternative(w, 0, 1, 0, 1) == r.A2x[0][1]);
}

TEST_CASE("free fermion R-weights on random generalized free fermion samples") {
    std::mt19937_64 rng(20240601);
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s < 20; ++s) {
            auto w = random_gff_weights(rng, n);
            auto r = r_weights_free_fermion(w, 0, 1);
            auto rep = check_ybe(w, r);
            CHECK_MESSAGE(rep.passed, "n=", n, " sample ", s);
            CHECK(all_passed(check_appendix_suite(w, r)));
            for (int k = 0; k < n; ++k) {
                CHECK(r.B1[static_cast<std::size_t>(k)] == r.B1[0]);
                CHECK(r.B2[static_cast<std::size_t>(k)] == r.B2[0]);
                CHECK(r.A2[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == r.A2[0][0]);
                for (int m = 0; m < n; ++m)
                    if (k != m)
                        CHECK(a2x_alternative(w, 0, 1, k, m) ==
                              r.A2x[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]);
            }
            // the reversed pair needs its own table
            auto r2 = r_weights_free_fermion(w, 1, 0);
            CHECK(check_ybe(w, r2).passed);
        }
}

TEST_CASE("non free fermion R-weights") {
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s < 5; ++s) {
            auto same = random_identical_rows(rng, n);
            auto& row = same.rows[0];
            REQUIRE_FALSE((row.a1 * row.a2[0] + row.b1 * row.b2[0] - row.c1 * row.c2).is_zero());
            auto r = r_weights_nonff(same, 0, 1);
            CHECK(r.B1[0].is_zero());
            CHECK(r.B2[0].is_zero());
            CHECK(check_ybe(same, r).passed);

            auto w = nonff_pair(rng, n);
            CHECK(check_ybe(w, r_weights_nonff(w, 0, 1)).passed);
        }
    auto w = random_gff_weights(rng, 2);
    w.rows[1].a1 *= Poly(Rational(2));
    CHECK_THROWS_AS(r_weights_nonff(w, 0, 1), std::invalid_argument);
}

TEST_CASE("charge condition violated") {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 5; ++s) {
        auto w = random_charge_broken(rng, 2);
        auto ff = free_fermion_check(w);
        CHECK(ff.zero_charge);
        CHECK_FALSE(ff.charge_condition);
        CHECK_THROWS_AS(r_weights_free_fermion(w, 0, 1), std::invalid_argument);
        auto r = r_weights_free_fermion(w, 0, 1, false);
        auto rep = check_ybe(w, r);
        CHECK_FALSE(rep.passed);
        CHECK_FALSE(rep.failures.empty());
        CHECK_FALSE(all_passed(check_appendix_suite(w, r)));
        // an overall rescaling of the table does not matter
        RWeightTable scaled = r;
        scaled.A1 *= Poly(Rational(3));
        for (auto* v : {&scaled.B1, &scaled.B2, &scaled.C1, &scaled.C2})
            for (auto& x : *v) x *= Poly(Rational(3));
        for (auto* m : {&scaled.A2, &scaled.A2x})
            for (auto& rowv : *m)
                for (auto& x : rowv) x *= Poly(Rational(3));
        CHECK(check_ybe(w, scaled).failures.size() == rep.failures.size());
    }
}

TEST_CASE("fault injection in the equation suite") {
    std::mt19937_64 rng(11);
    auto w = random_gff_weights(rng, 3);
    auto r = r_weights_free_fermion(w, 0, 1);
    REQUIRE(all_passed(check_appendix_suite(w, r)));
    r.C1[2] *= Poly(Rational(5, 4));
    auto eqs = check_appendix_suite(w, r);
    std::size_t failed = 0;
    for (const auto& e : eqs)
        if (!e.passed) {
            ++failed;
            CHECK_MESSAGE(mentions(e.name, "C1"), e.name);
            CHECK_FALSE(e.residual.is_zero());
        }
    CHECK(failed > 0);
    CHECK_FALSE(check_ybe(w, r).passed);
}

TEST_CASE("r-vertex lookup") {
    std::mt19937_64 rng(3);
    auto w = random_gff_weights(rng, 2);
    auto r = r_weights_free_fermion(w, 0, 1);
    auto P = DecoratedSpin::plus();
    auto m0 = DecoratedSpin::minus_with(0), m1 = DecoratedSpin::minus_with(1);
    CHECK(r.weight(P, P, P, P) == &r.A1);
    CHECK(r.weight(m1, m0, m1, m0) == &r.A2[1][0]);
    CHECK(r.weight(m0, m1, m1, m0) == &r.A2x[1][0]);
    CHECK(r.weight(m1, P, P, m1) == &r.B1[1]);
    CHECK(r.weight(P, m1, m1, P) == &r.B2[1]);
    CHECK(r.weight(P, m1, P, m1) == &r.C1[1]);
    CHECK(r.weight(m0, P, m0, P) == &r.C2[0]);
    CHECK(r.weight(m0, P, P, P) == nullptr);
    CHECK(r.weight(m0, P, m1, P) == nullptr);
    CHECK(r.weight(m0, m1, m0, m0) == nullptr);
    CHECK(r.weight(DecoratedSpin::minus_with(2), P, DecoratedSpin::minus_with(2), P) == nullptr);

    auto reg = make_registry();
    auto gw = standard_weights(WeightKind::gamma, symbolic_params(reg, 2));
    CHECK_THROWS_AS(r_weights_free_fermion(gw, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(r_weights_free_fermion(w, 0, 0), std::invalid_argument);
}
