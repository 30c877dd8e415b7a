#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffl/fockspace.hpp"
#include "ffl/symmfunc.hpp"

using namespace ffl;

namespace {

FockVector ket(Parts p) { return FockVector(MayaState(StrictPartition(std::move(p)))); }

std::vector<StrictPartition> small_basis() { return enumerate_strict(5); }

HamiltonianParams abstract_params(const RegistryPtr& reg, std::size_t rows, int K, Sign sign = Sign::plus) {
    HamiltonianParams H;
    H.sign = sign;
    H.K = K;
    for (std::size_t j = 0; j < rows; ++j) {
        std::vector<Poly> r;
        for (int k = 1; k <= K; ++k)
            r.push_back(Poly::var(reg, "s" + std::to_string(j + 1) + "_" + std::to_string(k)));
        H.s.push_back(r);
    }
    return H;
}

}  // namespace

TEST_CASE("fermion examples") {
    CHECK(apply_psi_star(0, ket({})) == ket({0}));
    CHECK(apply_psi_star(1, ket({})) == ket({1}));
    CHECK(apply_psi_star(1, ket({2})) == ket({2, 1}).scaled(Poly(-1)));
    CHECK(apply_psi_star(2, ket({2})).is_zero());
    CHECK(apply_psi(1, ket({1})) == ket({}));
    CHECK(apply_psi(1, ket({2, 1})) == ket({2}).scaled(Poly(-1)));
    CHECK(apply_psi(1, ket({2})).is_zero());
    // ⟨ψ_{-1/2} ψ*_{-1/2}⟩ with the sea site -1/2 being label 0
    FockVector sea_hole = apply_psi(-1, ket({}));
    CHECK_FALSE(sea_hole.hole_free());
    CHECK(vacuum_pairing(StrictPartition(), apply_psi_star(-1, sea_hole)) == Poly(1));
    CHECK_THROWS_AS(vacuum_pairing(StrictPartition(), sea_hole), PairingError);
    CHECK(vacuum_pairing(StrictPartition({1}), ket({1})) == Poly(1));
    CHECK(vacuum_pairing(StrictPartition({1}), ket({2})).is_zero());
}

TEST_CASE("current operator examples") {
    CHECK(apply_Jk(1, ket({1})) == ket({0}));
    CHECK(apply_Jk(1, ket({2, 1})) == ket({2, 0}));
    FockVector expected = ket({2});
    expected.add(MayaState(StrictPartition({1, 0}), {-1}), Poly(1));
    CHECK(apply_Jk(-1, ket({1})) == expected);
    CHECK_THROWS(apply_Jk(0, ket({1})));
}

TEST_CASE("anticommutation on the small basis") {
    for (const auto& lam : small_basis()) {
        FockVector v = ket(lam.parts());
        for (int k = -2; k <= 6; ++k)
            for (int m = -2; m <= 6; ++m) {
                FockVector cc = apply_psi_star(k, apply_psi_star(m, v)) + apply_psi_star(m, apply_psi_star(k, v));
                CHECK(cc.is_zero());
                FockVector aa = apply_psi(k, apply_psi(m, v)) + apply_psi(m, apply_psi(k, v));
                CHECK(aa.is_zero());
                FockVector ac = apply_psi(k, apply_psi_star(m, v)) + apply_psi_star(m, apply_psi(k, v));
                CHECK(ac == (k == m ? v : FockVector()));
            }
    }
}

TEST_CASE("Heisenberg relations") {
    for (const auto& lam : small_basis()) {
        FockVector v = ket(lam.parts());
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) {
                if (m == 0 || n == 0) continue;
                FockVector c = apply_Jk(m, apply_Jk(n, v)) - apply_Jk(n, apply_Jk(m, v));
                CHECK(c == (m == -n ? v.scaled(Poly(m)) : FockVector()));
            }
    }
}

TEST_CASE("tau function examples") {
    auto reg = make_registry();
    auto H = abstract_params(reg, 1, 3);
    Poly s1 = Poly::var(reg, "s1_1"), s2 = Poly::var(reg, "s1_2");
    CHECK(tau_function(StrictPartition({0}), StrictPartition({2}), H) == s2 + (s1 * s1).scaled(Rational(1, 2)));
    CHECK(tau_function(StrictPartition({1}), StrictPartition({1}), H) == Poly(1));
    CHECK(tau_function(StrictPartition({1, 0}), StrictPartition({1}), H).is_zero());
    CHECK(tau_function(StrictPartition({2}), StrictPartition({1}), H).is_zero());
    H.K = 1;
    H.s[0].resize(1);
    CHECK_THROWS_AS(tau_function(StrictPartition({0}), StrictPartition({2}), H), std::out_of_range);

    auto a = make_alphabet(reg, 1);
    HamiltonianParams S;
    S.K = 2;
    S.s = supersymmetric_row_params(a, 2);
    Poly x = a.x[0], y = a.y[0];
    CHECK(tau_function(StrictPartition({0}), StrictPartition({2}), S) == x * x + x * y);
}

TEST_CASE("Wick determinant examples") {
    auto reg = make_registry();
    auto H = abstract_params(reg, 1, 4);
    SymParams sp{H.summed()};
    Poly h1 = gen_h(sp, 1), h2 = gen_h(sp, 2), h3 = gen_h(sp, 3);
    CHECK(wick_tau(StrictPartition({1, 0}), StrictPartition({3, 1}), H) == h2 * h1 - h3);
    CHECK(wick_tau(StrictPartition({3, 1}), StrictPartition({3, 1}), H) == Poly(1));
    CHECK(wick_tau(StrictPartition({1}), StrictPartition({3, 1}), H).is_zero());
}

TEST_CASE("Wick determinant equals tau function") {
    auto reg = make_registry();
    for (std::size_t N = 1; N <= 2; ++N) {
        auto H = abstract_params(reg, N, 15);
        for (const auto& lam : enumerate_strict(5, {.max_length = 3}))
            for (const auto& mu : enumerate_strict(5, {.length = lam.length()})) {
                if (mu.size() > lam.size()) continue;
                CHECK(wick_tau(mu, lam, H) == tau_function(mu, lam, H));
            }
    }
}

TEST_CASE("duality between H+ and H-") {
    auto reg = make_registry();
    for (std::size_t N = 1; N <= 2; ++N) {
        auto Hp = abstract_params(reg, N, 15);
        HamiltonianParams Hm = Hp;
        Hm.sign = Sign::minus;
        Bindings om;
        for (std::size_t j = 0; j < N; ++j)
            for (int k = 1; k <= Hp.K; ++k) {
                Poly s = Hp.s[j][static_cast<std::size_t>(k - 1)];
                Poly t = k % 2 ? s : -s;
                Hm.s[j][static_cast<std::size_t>(k - 1)] = t;
                om.emplace(reg->name(s.terms()[0].mono.powers()[0].var), t);
            }
        for (const auto& lam : enumerate_strict(5, {.max_length = 3}))
            for (const auto& mu : enumerate_strict(5, {.length = lam.length()})) {
                if (mu.size() > lam.size()) continue;
                CHECK(substitute(tau_function(mu, lam, Hp), om) == tau_function(lam, mu, Hm));
            }
    }
}

TEST_CASE("row order does not matter") {
    auto reg = make_registry();
    auto H = abstract_params(reg, 2, 12);
    HamiltonianParams R = H;
    std::swap(R.s[0], R.s[1]);
    for (const auto& lam : enumerate_strict(4, {.max_length = 3}))
        for (const auto& mu : enumerate_strict(4, {.length = lam.length()})) {
            if (mu.size() > lam.size()) continue;
            CHECK(tau_function(mu, lam, H) == tau_function(mu, lam, R));
        }
}

TEST_CASE("U and D operators") {
    FockVector v = ket({0});
    CHECK(apply_Uk_Dk(UD::U, 1, v) == apply_Jk(-1, v));
    FockVector comm = apply_Uk_Dk(UD::D, 1, apply_Uk_Dk(UD::U, 1, v)) - apply_Uk_Dk(UD::U, 1, apply_Uk_Dk(UD::D, 1, v));
    CHECK(comm == v);
    FockVector u2 = (apply_Jk(-2, v) + apply_Jk(-1, apply_Jk(-1, v))).scaled(Poly(Rational(1, 2)));
    CHECK(apply_Uk_Dk(UD::U, 2, v) == u2);
}

TEST_CASE("boundary operator case A is e^phi") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 1);
    HamiltonianParams S;
    S.K = 4;
    S.s = supersymmetric_row_params(a, 4);
    FockVector v = ket({3, 1});
    auto r = boundary_operator(BoundaryCase::A, S, 0, a.x[0] + a.y[0], 3, v, 4);
    CHECK(r.numerator == apply_exp_phi(S, 0, v, 4));
    CHECK(r.denominator == Poly(1));
    CHECK_THROWS_AS(boundary_operator(BoundaryCase::B, S, 0, Poly(0), 3, v, 4), AlgebraError);
}
