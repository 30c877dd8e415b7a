#include "ffl/harness.hpp"
#include "ffl/ybe.hpp"

#include "harness_util.hpp"

#include <algorithm>
#include <sstream>

namespace ffl {

using namespace detail;

namespace {

std::string tag(const std::string& base, std::size_t N, int M) {
    return base + " N=" + std::to_string(N) + " M=" + std::to_string(M);
}

int grid_degree(int max_part, std::size_t max_len) { return std::max(1, max_part * static_cast<int>(max_len)); }

}  // namespace

// ---- criterion: classical match

CheckReport check_match_classical(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "match";
    auto reg = make_registry();
    std::mt19937_64 rng(cfg.seed);
    Section delta{"delta"}, gamma{"gamma"}, neg{"negative-control"};
    const int K = grid_degree(cfg.max_part, cfg.max_length);
    for (std::size_t N = 1; N <= cfg.N; ++N) {
        auto p = classical_params(reg, N, cfg.mode, rng);
        SuperAlphabet a{p.x, p.y};
        auto Hp = super_hamiltonian(a, K), Hm = super_hamiltonian(a.swapped(), K, Sign::minus);
        auto wd = standard_weights(WeightKind::delta, p), wg = standard_weights(WeightKind::gamma, p);
        for (int M = cfg.m_low(); M <= cfg.M; ++M)
            for (const auto& [lam, mu] : strict_grid(std::min(cfg.max_part, M), cfg.max_length)) {
                std::string inst = tag(pair_str(lam, mu), N, M);
                Poly sc = scale(p, M, lam.length());
                Poly zd = partition_function(make_model(wd, M, lam, mu));
                Poly td = sc * tau_function(mu, lam, Hp);
                delta.record(zd == td, inst, zd == td ? "" : mismatch(zd, td));
                Poly zg = partition_function(make_model(wg, M, lam, mu)) * sc;
                Poly tg = tau_function(lam, mu, Hm);
                gamma.record(zg == tg, inst, zg == tg ? "" : mismatch(zg, tg));
            }
    }
    // a2 doubled in the first row: no longer free fermionic
    {
        const int M = std::max(cfg.m_low(), 1);
        auto p = classical_params(reg, 1, cfg.mode, rng);
        auto w = standard_weights(WeightKind::delta, p);
        w.rows[0].a2[0] *= Poly(2);
        auto Hp = super_hamiltonian(SuperAlphabet{p.x, p.y}, K);
        for (const auto& [lam, mu] : strict_grid(std::min(cfg.max_part, M), cfg.max_length)) {
            bool differs = partition_function(make_model(w, M, lam, mu)) != scale(p, M, lam.length()) * tau_function(mu, lam, Hp);
            neg.expect_witness(differs, tag(pair_str(lam, mu), 1, M) + " with a2 doubled");
            if (differs) break;
        }
    }
    rep.add(delta);
    rep.add(gamma);
    rep.add(neg);
    if (cfg.mode == SampleMode::random)
        rep.notes.push_back("random-rational mode: a failure is definitive, a pass is evidence only");
    return rep;
}

// ---- criterion: charged match

CheckReport check_match_charged(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "match-charged";
    auto reg = make_registry();
    std::mt19937_64 rng(cfg.seed);
    const int M = cfg.max_part;
    for (int n = 2; n <= std::max(2, cfg.n); ++n) {
        auto g = g_table(reg, n);
        QFock Fd(g), Fg(g.starred());
        const int K = std::max(1, grid_degree(cfg.max_part, cfg.max_length) / n);
        Section delta{"delta n=" + std::to_string(n)}, gamma{"gamma n=" + std::to_string(n)};
        for (std::size_t N = 1; N <= cfg.N; ++N) {
            auto p = charged_ff_params(reg, N, g, cfg.mode, rng);
            auto Hp = charged_delta_hamiltonian(p, g, K), Hm = charged_gamma_hamiltonian(p, g, K);
            auto wd = standard_weights(WeightKind::delta_charged, p), wg = standard_weights(WeightKind::gamma_charged, p);
            for (const auto& [lam, mu] : strict_grid(M, cfg.max_length)) {
                std::string inst = tag(pair_str(lam, mu), N, M);
                Poly sc = scale(p, M, lam.length());
                Poly zd = partition_function(make_model(wd, M, lam, mu));
                Poly td = sc * Fd.q_tau(mu, lam, Hp);
                delta.record(zd == td, inst, zd == td ? "" : mismatch(zd, td));
                Poly zg = partition_function(make_model(wg, M, lam, mu)) * sc;
                Poly tg = Fg.q_tau(lam, mu, Hm);
                gamma.record(zg == tg, inst, zg == tg ? "" : mismatch(zg, tg));
            }
        }
        rep.add(delta);
        rep.add(gamma);
    }
    // independent y: the F-charge condition fails
    {
        Section neg{"negative-control"};
        const int n = 2;
        auto g = g_table(reg, n);
        QFock Fd(g);
        auto p = symbolic_params(reg, 1, n);
        for (int a = 0; a < n; ++a) p.h[static_cast<std::size_t>(a)] = g.at(a) * p.f[static_cast<std::size_t>(a)];
        auto w = standard_weights(WeightKind::delta_charged, p);
        auto Hp = charged_delta_hamiltonian(p, g, std::max(1, grid_degree(M, cfg.max_length) / n));
        if (free_fermion_check(w).charge_condition) throw std::logic_error("negative control keeps the charge condition");
        for (const auto& [lam, mu] : strict_grid(M, cfg.max_length)) {
            bool differs = partition_function(make_model(w, M, lam, mu)) != scale(p, M, lam.length()) * Fd.q_tau(mu, lam, Hp);
            neg.expect_witness(differs, tag(pair_str(lam, mu), 1, M) + " n=2, y independent of x breaks the charge condition");
            if (differs) break;
        }
        rep.add(neg);
    }
    rep.notes.push_back("charged weights are taken on y = x, h = g f");
    return rep;
}

// ---- criterion: Schur routes

CheckReport check_schur_routes(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "schur";
    auto reg = make_registry();
    Section routes{"routes"}, bialt{"bialternant"};
    for (std::size_t N = 1; N <= cfg.N; ++N) {
        auto a = make_alphabet(reg, N);
        auto shapes = enumerate_partitions(cfg.max_size, static_cast<std::size_t>(cfg.max_size), cfg.max_size);
        for (const auto& lam : shapes) {
            for (const auto& mu : shapes) {
                if (mu.size() > lam.size()) continue;
                std::string inst = pair_str(lam, mu) + " N=" + std::to_string(N);
                Poly t = supersym_schur(lam, mu, a, SchurRoute::tableaux);
                Poly j = supersym_schur(lam, mu, a, SchurRoute::jacobi_trudi);
                Poly h = supersym_schur(lam, mu, a, SchurRoute::hamiltonian);
                bool ok = t == j && j == h;
                routes.record(ok, inst, ok ? "" : "tableaux " + short_str(t) + " jacobi_trudi " + short_str(j) + " hamiltonian " + short_str(h));
            }
            if (lam.trimmed().length() <= N) {
                Poly b = supersym_schur_bialternant(lam, a);
                Poly t = supersym_schur(lam, Partition(), a, SchurRoute::tableaux);
                bialt.record(b == t, lam.str() + " N=" + std::to_string(N), b == t ? "" : "bialternant " + short_str(b) + " tableaux " + short_str(t));
            }
        }
    }
    if (!bialt.passed)
        rep.findings.push_back(
            "the bialternant A_{λ+ρ}/A_ρ with (x|y)^r = (x+y_1)...(x+y_r) is the factorial Schur function; it "
            "differs from the supertableau sum (first witness " + bialt.failures.front().instance + ")");
    rep.add(routes);
    rep.add(bialt);
    return rep;
}

// ---- criterion: Wick and dual Jacobi-Trudi

CheckReport check_wick(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "wick";
    auto reg = make_registry();
    Section wick{"wick-equals-tau"}, dual{"h-det-equals-e-det"};
    auto shapes = enumerate_partitions(cfg.max_size, static_cast<std::size_t>(cfg.max_size), cfg.max_size);
    for (std::size_t N = 1; N <= cfg.N; ++N) {
        auto H = super_hamiltonian(make_alphabet(reg, N), 2 * cfg.max_size);
        for (const auto& lam : shapes)
            for (const auto& mu : shapes) {
                if (mu.size() > lam.size()) continue;
                std::size_t l = std::max(lam.trimmed().length(), mu.trimmed().length());
                auto L = rho_plus(lam.trimmed().padded(l)), Mu = rho_plus(mu.trimmed().padded(l));
                Poly a = wick_tau(Mu, L, H), b = tau_function(Mu, L, H);
                wick.record(a == b, pair_str(lam, mu) + " N=" + std::to_string(N), a == b ? "" : mismatch(a, b));
            }
    }
    const int D = cfg.max_size + 1;
    SymParams s;
    for (int k = 1; k <= D; ++k) s.s.push_back(Poly::var(reg, "s" + std::to_string(k)));
    for (const auto& lam : enumerate_partitions(D, static_cast<std::size_t>(D), D))
        for (const auto& mu : enumerate_partitions(lam.size(), static_cast<std::size_t>(D), D)) {
            if (!contained(mu, lam)) continue;
            Poly a = sigma_skew(lam, mu, s), b = sigma_skew_dual(lam, mu, s);
            dual.record(a == b, pair_str(lam, mu), a == b ? "" : mismatch(a, b));
        }
    rep.add(wick);
    rep.add(dual);
    rep.notes.push_back("dual determinants use formal s_1..s_" + std::to_string(D) + ", |λ| <= " + std::to_string(D));
    return rep;
}

// ---- criterion: YBE

namespace {

struct YbeTally {
    std::size_t agree = 0, disagree = 0;
    std::vector<std::string> divergent;
};

void ybe_instance(Section& s, YbeTally& t, const VertexWeights& w, const RWeightTable& r, const std::string& inst,
                  bool with_suite) {
    auto y = check_ybe(w, r);
    std::string detail;
    if (!y.passed) detail = std::to_string(y.failures.size()) + " of " + std::to_string(y.cases) + " cases fail, first " + y.failures.front().str();
    s.record(y.passed, inst, detail);
    if (with_suite) {
        bool suite = all_passed(check_appendix_suite(w, r));
        if (suite == y.passed) ++t.agree;
        else {
            ++t.disagree;
            t.divergent.push_back(inst);
        }
    }
}

}  // namespace

CheckReport check_ybe_suite(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "ybe";
    auto reg = make_registry();
    std::mt19937_64 rng(cfg.seed);
    YbeTally tally;
    {
        Section s{"free-fermion R-weights symbolic n=1"};
        auto w = standard_weights(WeightKind::delta, symbolic_params(reg, 2));
        ybe_instance(s, tally, w, r_weights_free_fermion(w, 0, 1), "rows (1,2)", true);
        ybe_instance(s, tally, w, r_weights_free_fermion(w, 1, 0), "rows (2,1)", true);
        rep.add(s);
    }
    {
        Section s{"free-fermion R-weights symbolic charged n=2"};
        auto g = g_table(reg, 2);
        auto w = standard_weights(WeightKind::delta_charged, charged_ff_params(reg, 2, g, SampleMode::symbolic, rng));
        ybe_instance(s, tally, w, r_weights_free_fermion(w, 0, 1), "rows (1,2)", true);
        rep.add(s);
    }
    for (int n = 1; n <= std::max(cfg.n, 1); ++n) {
        Section s{"free-fermion R-weights random n=" + std::to_string(n)}, alt{"a2x expressions agree n=" + std::to_string(n)};
        for (int k = 0; k < cfg.samples; ++k) {
            auto w = random_gff_weights(rng, n);
            auto r = r_weights_free_fermion(w, 0, 1);
            ybe_instance(s, tally, w, r, "sample " + std::to_string(k), true);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b) {
                        bool same = a2x_alternative(w, 0, 1, a, b) == r.A2x[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        alt.record(same, "sample " + std::to_string(k) + " k=" + std::to_string(a) + " m=" + std::to_string(b));
                    }
        }
        rep.add(s);
        if (n > 1) rep.add(alt);
    }
    {
        Section s{"non-free-fermion R-weights identical rows"};
        for (int n = 1; n <= std::max(cfg.n, 1); ++n)
            for (int k = 0; k < std::max(1, cfg.samples / 4); ++k) {
                auto w = random_identical_rows(rng, n);
                const auto& r0 = w.rows[0];
                if ((r0.a1 * r0.a2[0] + r0.b1 * r0.b2[0] - r0.c1 * r0.c2).is_zero()) continue;
                ybe_instance(s, tally, w, r_weights_nonff(w, 0, 1), "n=" + std::to_string(n) + " sample " + std::to_string(k), false);
            }
        rep.add(s);
    }
    {
        Section neg{"negative-control"};
        for (int k = 0; k < 5 && neg.witness.empty(); ++k) {
            auto w = random_charge_broken(rng, 2);
            auto r = r_weights_free_fermion(w, 0, 1, false);
            auto y = check_ybe(w, r);
            bool suite = all_passed(check_appendix_suite(w, r));
            if (suite == y.passed) ++tally.agree;
            else {
                ++tally.disagree;
                tally.divergent.push_back("charge-broken sample " + std::to_string(k));
            }
            neg.expect_witness(!y.passed, "n=2 charge-broken sample " + std::to_string(k) +
                                              (y.passed ? "" : ": " + y.failures.front().str()));
        }
        rep.add(neg);
    }
    {
        Section agree{"appendix suite agrees with the full YBE"};
        for (std::size_t i = 0; i < tally.agree; ++i) agree.record(true, "");
        for (const auto& d : tally.divergent) agree.record(false, d, "suite and YBE disagree");
        if (tally.disagree) rep.findings.push_back("the appendix suite and the full YBE disagree on " + std::to_string(tally.disagree) + " samples");
        rep.add(agree);
    }
    rep.notes.push_back("non-free-fermion R-weights are used with the C and off-diagonal A2 weights carrying the factor (a1 a2(0) + b1 b2(0))/(c1 c2)");
    rep.notes.push_back("the equation 'A1 b1(i) c2(j) = ...' is checked with B1 on its right side; the B2 reading fails");
    return rep;
}

CheckReport check_appendix(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "appendix";
    auto reg = make_registry();
    std::mt19937_64 rng(cfg.seed + 1);
    auto run = [&](Section& s, const VertexWeights& w, const std::string& inst) {
        auto r = r_weights_free_fermion(w, 0, 1);
        for (const auto& e : check_appendix_suite(w, r))
            s.record(e.passed, inst + " " + e.name, e.passed ? "" : "residual " + short_str(e.residual));
    };
    {
        Section s{"symbolic n=1"};
        run(s, standard_weights(WeightKind::delta, symbolic_params(reg, 2)), "standard delta");
        rep.add(s);
    }
    for (int n = 1; n <= std::max(cfg.n, 1); ++n) {
        Section s{"random n=" + std::to_string(n)};
        for (int k = 0; k < cfg.samples; ++k) run(s, random_gff_weights(rng, n), "sample " + std::to_string(k));
        rep.add(s);
    }
    {
        Section s{"fault injection"};
        auto w = random_gff_weights(rng, 3);
        auto r = r_weights_free_fermion(w, 0, 1);
        r.C1[2] *= Poly(Rational(5, 4));
        bool any = false, only_c1 = true;
        for (const auto& e : check_appendix_suite(w, r))
            if (!e.passed) {
                any = true;
                only_c1 = only_c1 && e.name.find("C1") != std::string::npos;
            }
        s.record(any && only_c1, "C1(2) scaled by 5/4 at n=3", any ? (only_c1 ? "" : "an equation without C1 failed") : "no equation failed");
        rep.add(s);
    }
    return rep;
}

CheckReport check_ybe_weights(const CheckConfig& cfg, const VertexWeights& w0) {
    CheckReport rep;
    rep.check = "ybe";
    std::mt19937_64 rng(cfg.seed);
    VertexWeights w = cfg.mode == SampleMode::random ? specialize_random(w0, rng) : w0;
    if (w.orientation != Orientation::delta) throw ConfigError("YBE check needs delta-orientation weights");
    if (w.N() < 2) throw ConfigError("YBE check needs at least two rows");
    Section s{"weights " + cfg.weights}, suite{"appendix suite"};
    for (std::size_t i = 0; i < w.N(); ++i)
        for (std::size_t j = 0; j < w.N(); ++j) {
            if (i == j) continue;
            std::string inst = "rows (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            std::optional<RWeightTable> r;
            bool ff = false;
            try {
                r = r_weights_free_fermion(w, i, j);
                ff = true;
            } catch (const std::invalid_argument&) {
                try {
                    r = r_weights_nonff(w, i, j);
                } catch (const std::invalid_argument&) {
                }
            }
            if (!r) {
                s.record(false, inst, "neither R-vertex table applies to these rows");
                continue;
            }
            auto y = check_ybe(w, *r);
            s.record(y.passed, inst + (ff ? " free-fermion R-weights" : " non-free-fermion R-weights"), y.passed ? "" : y.failures.front().str());
            if (ff) {
                bool ok = all_passed(check_appendix_suite(w, *r));
                suite.record(ok == y.passed, inst, ok == y.passed ? "" : "suite and YBE disagree");
            }
        }
    rep.add(s);
    if (suite.instances) rep.add(suite);
    if (cfg.mode == SampleMode::random) rep.notes.push_back("weights specialized at random rationals (seed " + std::to_string(cfg.seed) + ")");
    return rep;
}

// ---- criterion: positivity

CheckReport check_positivity(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "positivity";
    std::mt19937_64 rng(cfg.seed + 11);
    const int M = cfg.max_part;
    auto grid = strict_grid(M, cfg.max_length);
    auto numeric_params = [&](std::size_t N, bool allow_zero) {
        StandardParams p;
        for (std::size_t i = 0; i < N; ++i) {
            p.x.push_back(Poly(random_rational(rng, allow_zero)));
            p.y.push_back(Poly(random_rational(rng, allow_zero)));
            p.A.push_back(Poly(1));
            p.B.push_back(Poly(1));
        }
        return p;
    };
    Section pos{"nonnegative samples"};
    for (int k = 0; k < cfg.samples; ++k)
        for (std::size_t N = 1; N <= cfg.N; ++N) {
            auto w = standard_weights(WeightKind::delta, numeric_params(N, true));
            for (const auto& [lam, mu] : grid) {
                Poly z = partition_function(make_model(w, M, lam, mu));
                bool ok = z.is_constant() && z.constant_term() >= 0;
                pos.record(ok, "sample " + std::to_string(k) + " N=" + std::to_string(N) + " " + pair_str(lam, mu),
                           ok ? "" : "Z = " + short_str(z));
            }
        }
    rep.add(pos);
    Section zero{"zero specialization"};
    for (std::size_t N = 1; N <= cfg.N; ++N) {
        StandardParams p;
        for (std::size_t i = 0; i < N; ++i) {
            p.x.push_back(Poly(0));
            p.y.push_back(Poly(0));
            p.A.push_back(Poly(1));
            p.B.push_back(Poly(1));
        }
        auto w = standard_weights(WeightKind::delta, p);
        for (const auto& [lam, mu] : grid) {
            Poly z = partition_function(make_model(w, M, lam, mu));
            bool ok = z.is_zero() || z == Poly(1);
            zero.record(ok, "N=" + std::to_string(N) + " " + pair_str(lam, mu), ok ? "" : "Z = " + short_str(z));
        }
    }
    rep.add(zero);
    // the converse direction is only searched for
    {
        auto p = numeric_params(1, false);
        p.y[0] = -p.y[0];
        auto w = standard_weights(WeightKind::delta, p);
        std::string found;
        const int big = std::max(M, 6);
        for (const auto& [lam, mu] : strict_grid(big, cfg.max_length)) {
            Poly z = partition_function(make_model(w, big, lam, mu));
            if (z.is_constant() && z.constant_term() < 0) {
                found = pair_str(lam, mu) + " with y1 = " + p.y[0].str() + ", Z = " + z.str();
                break;
            }
        }
        rep.notes.push_back(found.empty() ? "negative-y search: inconclusive, no negative Z found with parts <= " + std::to_string(big)
                                          : "negative-y search: negative Z at " + found);
    }
    return rep;
}

// ---- criterion: q-Fock structure

CheckReport check_qfock(const CheckConfig& cfg) {
    CheckReport rep;
    rep.check = "qfock";
    auto reg = make_registry();
    std::mt19937_64 rng(cfg.seed + 3);
    Section heis{"heisenberg"}, conf{"confluence"}, degen{"n=1 degeneration"};
    for (int n = 1; n <= std::max(cfg.n, 1); ++n) {
        QFock F(g_table(reg, n));
        for (const auto& lam : enumerate_strict(2 * n + 2)) {
            FockVector v{MayaState(lam)};
            for (int k = -2; k <= 2; ++k)
                for (int l = -2; l <= 2; ++l) {
                    if (k == 0 || l == 0 || k < l) continue;
                    FockVector c = F.apply_Jk(k, F.apply_Jk(l, v)) - F.apply_Jk(l, F.apply_Jk(k, v));
                    FockVector want = k == -l ? v.scaled(F.heisenberg_constant(k)) : FockVector();
                    heis.record(c == want, "n=" + std::to_string(n) + " " + lam.str() + " [J" + std::to_string(k) + ",J" + std::to_string(l) + "]");
                }
        }
        Straightener st(g_table(reg, n));
        std::uniform_int_distribution<int> idx(-3, 2 * n + 2), len(1, 3);
        for (int it = 0; it < 200; ++it) {
            Word w(static_cast<std::size_t>(len(rng)));
            for (auto& e : w) e = idx(rng);
            auto left = st.normal_order(w);
            bool ok = left == st.normal_order_rightmost(w);
            for (const auto& [word, c] : left) ok = ok && is_normally_ordered(word);
            std::ostringstream os;
            for (int e : w) os << e << ' ';
            conf.record(ok, "n=" + std::to_string(n) + " word " + os.str());
        }
    }
    QFock F1(g_table(reg, 1));
    for (const auto& lam : enumerate_strict(4)) {
        FockVector v{MayaState(lam)};
        for (int k = -3; k <= 3; ++k)
            if (k) degen.record(F1.apply_Jk(k, v) == apply_Jk(k, v), lam.str() + " J" + std::to_string(k));
        for (int p = -2; p <= 5; ++p)
            degen.record(F1.apply_psi_star(p, v) == apply_psi_star(p, v), lam.str() + " psi*" + std::to_string(p));
    }
    auto H = formal_hamiltonian(reg, 1, 10, "s");
    for (const auto& [lam, mu] : strict_grid(4, 3))
        if (mu.size() <= lam.size()) degen.record(F1.q_tau(mu, lam, H) == tau_function(mu, lam, H), "tau " + pair_str(lam, mu));
    rep.add(heis);
    rep.add(conf);
    rep.add(degen);
    return rep;
}

}  // namespace ffl
