#include "ffl/harness.hpp"

#include "harness_util.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <regex>
#include <set>

namespace ffl {

using nlohmann::json;

// ---- report plumbing

static constexpr std::size_t kKeptFailures = 10;

void Section::record(bool ok, const std::string& instance, const std::string& detail) {
    ++instances;
    if (ok) return;
    passed = false;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back({instance, detail});
}

void Section::expect_witness(bool found, const std::string& instance) {
    negative_control = true;
    ++instances;
    if (found && witness.empty()) witness = instance;
    passed = !witness.empty();
}

std::size_t CheckReport::instances() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.instances;
    return n;
}

void CheckReport::add(Section s) {
    passed = passed && s.passed;
    sections.push_back(std::move(s));
}

void CheckReport::merge(const CheckReport& other) {
    for (auto s : other.sections) {
        s.name = other.check + "/" + s.name;
        add(std::move(s));
    }
    for (const auto& f : other.findings) findings.push_back(other.check + ": " + f);
    for (const auto& n : other.notes) notes.push_back(other.check + ": " + n);
}

json CheckReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["check"] = check;
    j["status"] = passed ? "pass" : "fail";
    j["instances"] = instances();
    json secs = json::array();
    for (const auto& s : sections) {
        json js;
        js["name"] = s.name;
        js["status"] = s.passed ? "pass" : "fail";
        js["instances"] = s.instances;
        if (s.negative_control) {
            js["negative_control"] = true;
            js["witness"] = s.witness.empty() ? json(nullptr) : json(s.witness);
        } else {
            js["failure_count"] = s.failure_count;
            json fs = json::array();
            for (const auto& f : s.failures) fs.push_back({{"instance", f.instance}, {"detail", f.detail}});
            js["failures"] = fs;
        }
        secs.push_back(js);
    }
    j["sections"] = secs;
    j["findings"] = findings;
    j["notes"] = notes;
    if (wall_ms) j["wall_ms"] = *wall_ms;
    return j;
}

// ---- configuration

void CheckConfig::validate() const {
    auto bad = [](const std::string& m) { throw ConfigError(m); };
    if (max_part < 0 || max_part > 8) bad("max_part must lie in [0, 8]");
    if (max_length > 4) bad("max_length must be at most 4");
    if (max_size < 0 || max_size > 7) bad("max_size must lie in [0, 7]");
    if (N < 1 || N > 3) bad("N must lie in [1, 3]");
    if (M < 0 || M > 12) bad("M must lie in [0, 12]");
    if (M_min && (*M_min < 0 || *M_min > M)) bad("M_min must lie in [0, M]");
    if (n < 1 || n > 3) bad("n must lie in [1, 3]");
    if (degree < 0 || degree > 8) bad("degree must lie in [0, 8]");
    if (samples < 1 || samples > 200) bad("samples must lie in [1, 200]");
}

json CheckConfig::to_json() const {
    json j{{"check", check},   {"max_part", max_part}, {"max_length", max_length}, {"max_size", max_size},
           {"N", N},           {"M", M},               {"n", n},                   {"degree", degree},
           {"seed", seed},     {"samples", samples},   {"timing", timing},
           {"mode", mode == SampleMode::symbolic ? "symbolic" : "random"}};
    if (M_min) j["M_min"] = *M_min;
    if (!weights.empty()) j["weights"] = weights;
    return j;
}

CheckConfig CheckConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known{"check", "max_part", "max_length", "max_size", "N",      "M",
                                             "M_min", "n",        "degree",     "seed",     "samples", "timing",
                                             "mode",  "weights",  "schema"};
    CheckConfig c;
    try {
        for (const auto& [k, v] : j.items()) {
            if (!known.count(k)) throw ConfigError("unknown config key: " + k);
            (void)v;
        }
        if (j.contains("schema") && j["schema"] != 1) throw ConfigError("unsupported config schema");
        if (j.contains("check")) c.check = j["check"].get<std::string>();
        if (j.contains("max_part")) c.max_part = j["max_part"].get<int>();
        if (j.contains("max_length")) c.max_length = j["max_length"].get<std::size_t>();
        if (j.contains("max_size")) c.max_size = j["max_size"].get<int>();
        if (j.contains("N")) c.N = j["N"].get<std::size_t>();
        if (j.contains("M")) c.M = j["M"].get<int>();
        if (j.contains("M_min")) c.M_min = j["M_min"].get<int>();
        if (j.contains("n")) c.n = j["n"].get<int>();
        if (j.contains("degree")) c.degree = j["degree"].get<int>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples")) c.samples = j["samples"].get<int>();
        if (j.contains("timing")) c.timing = j["timing"].get<bool>();
        if (j.contains("weights")) c.weights = j["weights"].get<std::string>();
        if (j.contains("mode")) {
            auto m = j["mode"].get<std::string>();
            if (m == "symbolic") c.mode = SampleMode::symbolic;
            else if (m == "random") c.mode = SampleMode::random;
            else throw ConfigError("mode must be symbolic or random");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    c.validate();
    return c;
}

// ---- weights

VertexWeights weights_from_json(const RegistryPtr& reg, const json& j) {
    try {
        VertexWeights w;
        auto o = j.value("orientation", std::string("delta"));
        if (o == "delta") w.orientation = Orientation::delta;
        else if (o == "gamma") w.orientation = Orientation::gamma;
        else throw ConfigError("orientation must be delta or gamma");
        w.n = j.value("n", 1);
        if (w.n < 1 || w.n > 3) throw ConfigError("weight table n must lie in [1, 3]");
        if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty()) throw ConfigError("weight table needs rows");
        auto poly = [&](const json& v) {
            if (v.is_number_integer()) return Poly(Rational(v.get<long>()));
            return parse_poly(reg, v.get<std::string>());
        };
        for (const auto& r : j["rows"]) {
            RowWeights row;
            row.a1 = poly(r.at("a1"));
            row.b1 = poly(r.at("b1"));
            row.c1 = poly(r.at("c1"));
            row.c2 = poly(r.at("c2"));
            auto table = [&](const json& v) {
                std::vector<Poly> out;
                if (v.is_array())
                    for (const auto& e : v) out.push_back(poly(e));
                else
                    out.push_back(poly(v));
                if (static_cast<int>(out.size()) != w.n) throw ConfigError("a2/b2 tables must have n entries");
                return out;
            };
            row.a2 = table(r.at("a2"));
            row.b2 = table(r.at("b2"));
            w.rows.push_back(std::move(row));
        }
        return w;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad weight table: ") + e.what());
    } catch (const AlgebraError& e) {
        throw ConfigError(std::string("bad weight polynomial: ") + e.what());
    }
}

VertexWeights weights_from_name(const RegistryPtr& reg, const std::string& name, std::size_t N, int n) {
    static const std::regex re(R"(standard:([a-z-]+)(?:\((\d)\))?)");
    std::smatch m;
    if (std::regex_match(name, m, re)) {
        std::string kind = m[1];
        int mod = m[2].matched ? std::stoi(m[2]) : n;
        if (mod < 1 || mod > 3) throw ConfigError("weight modulus must lie in [1, 3]");
        std::mt19937_64 unused(0);
        if (kind == "delta" || kind == "gamma")
            return standard_weights(kind == "delta" ? WeightKind::delta : WeightKind::gamma, symbolic_params(reg, N));
        if (kind == "charged-ff") {
            if (mod == 1) return standard_weights(WeightKind::delta, symbolic_params(reg, N));
            auto g = detail::g_table(reg, mod);
            return standard_weights(WeightKind::delta_charged,
                                    detail::charged_ff_params(reg, N, g, SampleMode::symbolic, unused));
        }
        if (kind == "nonff-identical-rows") {
            RowWeights r;
            r.a1 = Poly::var(reg, "a1");
            r.b1 = Poly::var(reg, "b1");
            r.c1 = Poly::var(reg, "c1");
            r.c2 = Poly::var(reg, "c2");
            for (int a = 0; a < mod; ++a) {
                r.a2.push_back(Poly::var(reg, "a2_" + std::to_string(a)));
                r.b2.push_back(Poly::var(reg, "b2_" + std::to_string(a)));
            }
            VertexWeights w;
            w.n = mod;
            w.rows.assign(N, r);
            return w;
        }
        throw ConfigError("unknown standard weight table: " + name);
    }
    std::ifstream in(name);
    if (!in) throw ConfigError("cannot open weight file: " + name);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("weight file is not valid JSON: ") + e.what());
    }
    return weights_from_json(reg, j);
}

VertexWeights specialize_random(const VertexWeights& w, std::mt19937_64& rng) {
    std::set<std::string> names;
    auto collect = [&](const Poly& p) {
        for (const auto& t : p.terms())
            for (const auto& vp : t.mono.powers()) names.insert(p.registry()->name(vp.var));
    };
    for (const auto& r : w.rows) {
        for (const Poly* p : {&r.a1, &r.b1, &r.c1, &r.c2}) collect(*p);
        for (const auto& p : r.a2) collect(p);
        for (const auto& p : r.b2) collect(p);
    }
    Bindings b;
    for (const auto& nm : names) b[nm] = Poly(detail::random_rational(rng));
    VertexWeights out = w;
    for (auto& r : out.rows) {
        for (Poly* p : {&r.a1, &r.b1, &r.c1, &r.c2}) *p = substitute(*p, b);
        for (auto& p : r.a2) p = substitute(p, b);
        for (auto& p : r.b2) p = substitute(p, b);
    }
    return out;
}

// ---- shared helpers

namespace detail {

std::vector<StrictPair> strict_grid(int max_part, std::size_t max_len) {
    std::vector<StrictPair> out;
    for (const auto& lam : enumerate_strict(max_part, {.length = std::nullopt, .max_length = max_len, .size = std::nullopt}))
        for (const auto& mu : enumerate_strict(max_part, {.length = lam.length(), .max_length = std::nullopt, .size = std::nullopt}))
            out.emplace_back(lam, mu);
    return out;
}

std::string pair_str(const StrictPartition& lam, const StrictPartition& mu) { return lam.str() + "/" + mu.str(); }
std::string pair_str(const Partition& lam, const Partition& mu) { return lam.str() + "/" + mu.str(); }

std::string short_str(const Poly& p, std::size_t cap) {
    std::string s = p.str();
    if (s.size() > cap) s = s.substr(0, cap) + "...";
    return s;
}

std::string mismatch(const Poly& lhs, const Poly& rhs) { return "difference " + short_str(lhs - rhs); }

Poly scale(const StandardParams& p, int M, std::size_t len) {
    Poly r(1);
    for (std::size_t i = 0; i < p.N(); ++i) r *= p.A[i].pow(M + 1) * p.B[i].pow(static_cast<int>(len));
    return r;
}

Rational random_rational(std::mt19937_64& rng, bool allow_zero) {
    std::uniform_int_distribution<int> num(allow_zero ? 0 : 1, 9), den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

StandardParams classical_params(const RegistryPtr& reg, std::size_t N, SampleMode mode, std::mt19937_64& rng) {
    if (mode == SampleMode::symbolic) return symbolic_params(reg, N);
    StandardParams p;
    for (std::size_t i = 0; i < N; ++i) {
        p.x.push_back(Poly(random_rational(rng)));
        p.y.push_back(Poly(random_rational(rng)));
        p.A.push_back(Poly(random_rational(rng)));
        p.B.push_back(Poly(random_rational(rng)));
    }
    return p;
}

GFunction g_table(const RegistryPtr& reg, int n) {
    return standard_g(reg, n, n == 3 ? Poly::var(reg, "c") : Poly(1));
}

StandardParams charged_ff_params(const RegistryPtr& reg, std::size_t N, const GFunction& g, SampleMode mode,
                                 std::mt19937_64& rng) {
    StandardParams p = symbolic_params(reg, N, g.n);
    if (mode == SampleMode::random) {
        for (std::size_t i = 0; i < N; ++i) {
            p.x[i] = Poly(random_rational(rng));
            p.A[i] = Poly(random_rational(rng));
            p.B[i] = Poly(random_rational(rng));
        }
        for (auto& f : p.f) f = Poly(random_rational(rng));
    }
    for (std::size_t i = 0; i < N; ++i) p.y[i] = p.x[i];
    for (int a = 0; a < g.n; ++a) p.h[static_cast<std::size_t>(a)] = g.at(a) * p.f[static_cast<std::size_t>(a)];
    return p;
}

HamiltonianParams super_hamiltonian(const SuperAlphabet& a, int K, Sign sign) {
    HamiltonianParams H;
    H.sign = sign;
    H.K = std::max(1, K);
    H.s = supersymmetric_row_params(a, H.K);
    return H;
}

static HamiltonianParams charged_hamiltonian(const StandardParams& p, const GFunction& g, int K, bool delta) {
    const int n = g.n;
    HamiltonianParams H;
    H.sign = delta ? Sign::plus : Sign::minus;
    H.K = std::max(1, K);
    Poly F(1);
    for (std::size_t a = 0; a < p.f.size(); ++a) F *= delta ? p.f[a] : p.h[a];
    Poly g0 = delta ? g.at(0) : g.at(0).pow(-1);
    for (std::size_t j = 0; j < p.N(); ++j) {
        const Poly &u = delta ? p.x[j] : p.y[j], &t = delta ? p.y[j] : p.x[j];
        std::vector<Poly> row;
        for (int k = 1; k <= H.K; ++k) {
            Poly second = g0.pow(k) * t.pow(k) * u.pow((n - 1) * k) * F.pow(k);
            Poly s = u.pow(n * k) * F.pow(k) + (k % 2 ? second : -second);
            row.push_back(s.scaled(Rational(1, k)));
        }
        H.s.push_back(std::move(row));
    }
    return H;
}

HamiltonianParams charged_delta_hamiltonian(const StandardParams& p, const GFunction& g, int K) {
    return charged_hamiltonian(p, g, K, true);
}

HamiltonianParams charged_gamma_hamiltonian(const StandardParams& p, const GFunction& g, int K) {
    return charged_hamiltonian(p, g, K, false);
}

HamiltonianParams formal_hamiltonian(const RegistryPtr& reg, std::size_t N, int K, const std::string& prefix,
                                     Sign sign) {
    HamiltonianParams H;
    H.sign = sign;
    H.K = std::max(1, K);
    for (std::size_t j = 1; j <= N; ++j) {
        std::vector<Poly> row;
        for (int k = 1; k <= H.K; ++k)
            row.push_back(Poly::var(reg, prefix + std::to_string(k) + "_" + std::to_string(j)));
        H.s.push_back(std::move(row));
    }
    return H;
}

StrictPartition staircase(std::size_t N) {
    Parts p;
    for (int i = static_cast<int>(N) - 1; i >= 0; --i) p.push_back(i);
    return StrictPartition(p);
}

StrictPartition staircase_plus(std::size_t N) {
    Parts p;
    for (int i = static_cast<int>(N); i >= 1; --i) p.push_back(i);
    return StrictPartition(p);
}

}  // namespace detail

// ---- dispatch

CheckReport run_check(const CheckConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    const std::string& c = cfg.check;
    if (c == "match") r = check_match_classical(cfg);
    else if (c == "match-charged") r = check_match_charged(cfg);
    else if (c == "ybe") {
        if (cfg.weights.empty()) {
            r = check_ybe_suite(cfg);
        } else {
            auto reg = make_registry();
            auto w = weights_from_name(reg, cfg.weights, std::max<std::size_t>(cfg.N, 2), cfg.n);
            r = check_ybe_weights(cfg, w);
        }
    } else if (c == "appendix") r = check_appendix(cfg);
    else if (c == "identities") r = check_identities(cfg);
    else if (c == "boundaries") r = check_boundaries(cfg);
    else if (c == "positivity") r = check_positivity(cfg);
    else if (c == "schur") r = check_schur_routes(cfg);
    else if (c == "wick") r = check_wick(cfg);
    else if (c == "qfock") r = check_qfock(cfg);
    else if (c == "tables") r = check_tables(cfg);
    else if (c == "all") {
        r.check = "all";
        for (auto* f : {check_match_classical, check_match_charged, check_ybe_suite, check_appendix,
                        static_cast<CheckReport (*)(const CheckConfig&)>(check_identities), check_boundaries,
                        check_positivity})
            r.merge(f(cfg));
    } else {
        throw ConfigError("unknown check: " + c);
    }
    if (cfg.timing)
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace ffl
