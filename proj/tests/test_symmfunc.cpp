#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffl/qfock.hpp"
#include "ffl/symmfunc.hpp"

using namespace ffl;

namespace {

SymParams abstract_sym(const RegistryPtr& reg, int K) {
    SymParams s;
    for (int k = 1; k <= K; ++k) s.s.push_back(Poly::var(reg, "s" + std::to_string(k)));
    return s;
}

std::vector<std::pair<Partition, Partition>> skew_shapes(int max_size, std::size_t max_len) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lam : enumerate_partitions(max_size, max_len, max_size))
        for (const auto& mu : enumerate_partitions(max_size, max_len, max_size))
            if (contained(mu, lam)) out.emplace_back(lam, mu);
    return out;
}

}  // namespace

TEST_CASE("h and e examples") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 4);
    Poly s1 = s.s[0], s2 = s.s[1];
    CHECK(gen_h(s, 0) == Poly(1));
    CHECK(gen_h(s, 1) == s1);
    CHECK(gen_h(s, 2) == s2 + (s1 * s1).scaled(Rational(1, 2)));
    CHECK(gen_e(s, 1) == s1);
    CHECK(gen_e(s, 2) == -s2 + (s1 * s1).scaled(Rational(1, 2)));
    for (int n = 1; n <= 4; ++n) {
        Poly acc(0);
        for (int r = 0; r <= n; ++r) acc += (gen_e(s, r) * gen_h(s, n - r)).scaled(r % 2 ? -1 : 1);
        CHECK(acc.is_zero());
        CHECK(gen_h(s, n) == gen_h_recursive(s, n));
    }
    auto a = make_alphabet(reg, 1);
    Poly x = a.x[0], y = a.y[0];
    CHECK(gen_h(supersymmetric_params(a, 2), 2) == x * x + x * y);
}

TEST_CASE("generating functions are exponentials") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 6);
    Poly t = Poly::var(reg, "t");
    Poly S(0), Sm(0), Hs(0), Es(0);
    for (int k = 1; k <= 6; ++k) {
        S += s.at(k) * t.pow(k);
        Sm += (s.at(k) * t.pow(k)).scaled(k % 2 ? 1 : -1);
    }
    for (int k = 0; k <= 6; ++k) {
        Hs += gen_h(s, k) * t.pow(k);
        Es += gen_e(s, k) * t.pow(k);
    }
    CHECK(formal_exp(S, {"t"}, 6) == Hs);
    CHECK(formal_exp(Sm, {"t"}, 6) == Es);
    CHECK(formal_log1p(Hs - Poly(1), {"t"}, 6) == S);
}

TEST_CASE("H times E is the identity") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 5);
    for (int n = 1; n <= 5; ++n) {
        PolyMatrix Hm(n, std::vector<Poly>(n)), Em(n, std::vector<Poly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Hm[i][j] = j >= i ? gen_h(s, j - i) : Poly(0);
                Em[i][j] = j >= i ? gen_e(s, j - i).scaled((j - i) % 2 ? -1 : 1) : Poly(0);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly acc(0);
                for (int k = 0; k < n; ++k) acc += Hm[i][k] * Em[k][j];
                CHECK(acc == Poly(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("omega") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 6);
    auto w = omega(s);
    CHECK(gen_h(w, 2) == gen_e(s, 2));
    for (int k = 1; k <= 6; ++k) CHECK(omega(w).at(k) == s.at(k));
    Partition lam({2, 1});
    CHECK(sigma_skew(lam, Partition(), w) == sigma_skew(conjugate(lam), Partition(), s));
}

TEST_CASE("sigma examples") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 4);
    CHECK(sigma_skew(Partition({1}), Partition(), s) == gen_h(s, 1));
    CHECK(sigma_skew(Partition({1, 1}), Partition(), s) == gen_e(s, 2));
    CHECK(sigma_skew(Partition({1}), Partition({2}), s).is_zero());
}

TEST_CASE("Jacobi-Trudi in h and in e agree") {
    auto reg = make_registry();
    auto s = abstract_sym(reg, 6);
    for (const auto& [lam, mu] : skew_shapes(6, 6)) CHECK(sigma_skew(lam, mu, s) == sigma_skew_dual(lam, mu, s));
}

TEST_CASE("supersymmetric Schur examples") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 1);
    Poly x = a.x[0], y = a.y[0];
    for (auto route : {SchurRoute::hamiltonian, SchurRoute::jacobi_trudi, SchurRoute::tableaux}) {
        CHECK(supersym_schur(Partition({1}), Partition(), a, route) == x + y);
        CHECK(supersym_schur(Partition({2}), Partition(), a, route) == x * x + x * y);
        CHECK(supersym_schur(Partition({1, 1}), Partition(), a, route) == x * y + y * y);
    }
    CHECK(supersym_schur_bialternant(Partition(), a) == Poly(1));
    CHECK(supersym_schur_bialternant(Partition({1}), a) == x + y);
    auto b = make_alphabet(reg, 2);
    CHECK(supersym_schur_bialternant(Partition({1}), b) ==
          supersym_schur(Partition({1}), Partition(), b, SchurRoute::tableaux));
    CHECK_THROWS(supersym_schur_bialternant(Partition({1, 1, 1}), b));
}

TEST_CASE("three Schur routes agree") {
    auto reg = make_registry();
    for (std::size_t N = 1; N <= 2; ++N) {
        auto a = make_alphabet(reg, N);
        for (const auto& [lam, mu] : skew_shapes(5, 5)) {
            Poly t = supersym_schur(lam, mu, a, SchurRoute::tableaux);
            CHECK(supersym_schur(lam, mu, a, SchurRoute::jacobi_trudi) == t);
            CHECK(supersym_schur(lam, mu, a, SchurRoute::hamiltonian) == t);
        }
    }
}

TEST_CASE("rotation by 180 degrees in a 3x3 box") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 2);
    for (const auto& lam : enumerate_partitions(9, 3, 3))
        for (const auto& mu : enumerate_partitions(9, 3, 3)) {
            if (!contained(mu, lam)) continue;
            Parts g(3), sg(3);
            for (std::size_t i = 0; i < 3; ++i) {
                g[i] = 3 - mu[2 - i];
                sg[i] = 3 - lam[2 - i];
            }
            CHECK(supersym_schur(lam, mu, a, SchurRoute::tableaux) ==
                  supersym_schur(Partition(g), Partition(sg), a, SchurRoute::tableaux));
        }
}

TEST_CASE("omega swaps the alphabets") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 2);
    for (const auto& [lam, mu] : skew_shapes(5, 5))
        CHECK(supersym_schur(lam, mu, a.swapped(), SchurRoute::jacobi_trudi) ==
              supersym_schur(conjugate(lam), conjugate(mu), a, SchurRoute::jacobi_trudi));
}

TEST_CASE("LLT examples") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 1);
    Poly x = a.x[0], y = a.y[0];
    auto g1 = standard_g(reg, 1);
    auto g2 = standard_g(reg, 2);
    CHECK(llt_polynomial(Partition({1}), Partition({0}), a, 1, g1) == x - y);
    CHECK(llt_polynomial(Partition({2, 1}), Partition({2, 1}), a, 2, g2) == Poly(1));
    CHECK(llt_polynomial(Partition({2}), Partition({0}), a, 2, g2) == x * x - y * y);
    CHECK(llt_polynomial(Partition({1}), Partition({0}), a, 2, g2).is_zero());
    CHECK_THROWS(llt_polynomial(Partition({1}), Partition({0}), a, 1, g2));
}

TEST_CASE("LLT at n = 1 is the supersymmetric Schur function with y negated") {
    auto reg = make_registry();
    auto a = make_alphabet(reg, 2);
    auto g1 = standard_g(reg, 1);
    Bindings neg;
    for (const auto& y : a.y) neg.emplace(reg->name(y.terms()[0].mono.powers()[0].var), -y);
    for (const auto& [lam, mu] : skew_shapes(4, 3))
        CHECK(llt_polynomial(lam, mu, a, 1, g1) ==
              substitute(supersym_schur(lam, mu, a, SchurRoute::jacobi_trudi), neg));
}
