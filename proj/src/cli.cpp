#include "ffl/cli.hpp"

#include "ffl/harness.hpp"
#include "ffl/qfock.hpp"
#include "ffl/symmfunc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace ffl {

namespace {

using json = nlohmann::json;

Parts parse_parts(const std::string& s) {
    Parts p;
    std::string t = s;
    for (char& c : t)
        if (c == '(' || c == ')') c = ' ';
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
            p.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("bad partition: " + s);
        }
    }
    return p;
}

StrictPartition strict_arg(const std::string& s) {
    try {
        return StrictPartition(parse_parts(s));
    } catch (const std::invalid_argument&) {
        throw ConfigError("not a strict partition: " + s);
    }
}

Partition partition_arg(const std::string& s) {
    try {
        return Partition(parse_parts(s));
    } catch (const std::invalid_argument&) {
        throw ConfigError("not a partition: " + s);
    }
}

// "x:2,y:1" gives x1, x2 | y1, 0
SuperAlphabet alphabet_arg(const RegistryPtr& reg, const std::string& s) {
    std::size_t nx = 0, ny = 0;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("alphabet entries look like x:2");
        std::string name = item.substr(0, colon);
        int count = 0;
        try {
            count = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad alphabet size in " + item);
        }
        if (count < 0 || count > 6) throw ConfigError("alphabet sizes must lie in [0, 6]");
        if (name == "x") nx = static_cast<std::size_t>(count);
        else if (name == "y") ny = static_cast<std::size_t>(count);
        else throw ConfigError("alphabet names are x and y");
    }
    std::size_t n = std::max(nx, ny);
    SuperAlphabet a;
    for (std::size_t i = 1; i <= n; ++i) {
        a.x.push_back(i <= nx ? Poly::var(reg, "x" + std::to_string(i)) : Poly(0));
        a.y.push_back(i <= ny ? Poly::var(reg, "y" + std::to_string(i)) : Poly(0));
    }
    return a;
}

struct Flags {
    std::string config;
    std::optional<int> n, M, M_min, max_part, max_size, degree, samples;
    std::optional<std::size_t> N, max_length;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode, weights;
    bool timing = false;
};

void add_check_flags(CLI::App* app, Flags& f) {
    app->add_option("--config", f.config, "JSON config file");
    app->add_option("--n", f.n, "charge modulus");
    app->add_option("--N", f.N, "number of rows");
    app->add_option("--M", f.M, "largest column index");
    app->add_option("--M-min", f.M_min, "smallest M in the sweep");
    app->add_option("--max-part", f.max_part, "largest part of λ, μ");
    app->add_option("--max-length", f.max_length, "longest λ, μ");
    app->add_option("--max-size", f.max_size, "|λ| bound for ordinary partitions");
    app->add_option("--degree", f.degree, "truncation degree");
    app->add_option("--seed", f.seed, "random seed");
    app->add_option("--samples", f.samples, "random samples per family");
    app->add_option("--mode", f.mode, "symbolic or random");
    app->add_option("--weights", f.weights, "standard:<name> or weight-table JSON file");
    app->add_flag("--timing", f.timing, "report wall time");
}

CheckConfig build_config(const std::string& check, const Flags& f) {
    CheckConfig c;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw ConfigError("cannot open config: " + f.config);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        c = CheckConfig::from_json(j);
    }
    if (!check.empty()) c.check = check;
    if (f.n) c.n = *f.n;
    if (f.N) c.N = *f.N;
    if (f.M) c.M = *f.M;
    if (f.M_min) c.M_min = *f.M_min;
    if (f.max_part) c.max_part = *f.max_part;
    if (f.max_length) c.max_length = *f.max_length;
    if (f.max_size) c.max_size = *f.max_size;
    if (f.degree) c.degree = *f.degree;
    if (f.samples) c.samples = *f.samples;
    if (f.seed) c.seed = *f.seed;
    if (f.weights) c.weights = *f.weights;
    if (f.timing) c.timing = true;
    if (f.mode) {
        if (*f.mode == "symbolic") c.mode = SampleMode::symbolic;
        else if (*f.mode == "random") c.mode = SampleMode::random;
        else throw ConfigError("mode must be symbolic or random");
    }
    c.validate();
    return c;
}

struct ComputeArgs {
    std::string lambda, mu, alpha, beta;
    std::string alphabet = "x:1,y:1";
    std::string route = "tableaux";
    std::string method = "transfer";
    std::string weights = "standard:delta";
    std::string sign = "plus";
    std::size_t N = 1;
    int M = 4;
    int n = 2;
};

json compute_partition_function(const ComputeArgs& a) {
    auto reg = make_registry();
    auto w = weights_from_name(reg, a.weights, a.N, a.n);
    Method m;
    if (a.method == "transfer") m = Method::transfer;
    else if (a.method == "brute") m = Method::brute;
    else throw ConfigError("method must be transfer or brute");
    ModelSpec spec;
    try {
        spec = make_model(w, a.M, strict_arg(a.lambda), strict_arg(a.mu), strict_arg(a.alpha), strict_arg(a.beta));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad model: ") + e.what());
    }
    Poly z = partition_function(spec, m);
    return {{"command", "partition-function"}, {"weights", a.weights}, {"N", w.N()}, {"M", a.M},
            {"lambda", spec.lambda.str()},     {"mu", spec.mu.str()},  {"value", z.str()}};
}

json compute_schur(const ComputeArgs& a) {
    auto reg = make_registry();
    auto al = alphabet_arg(reg, a.alphabet);
    Partition lam = partition_arg(a.lambda), mu = partition_arg(a.mu);
    Poly v;
    if (a.route == "bialternant") {
        if (mu.trimmed().length()) throw ConfigError("the bialternant route has no skew version");
        v = supersym_schur_bialternant(lam, al);
    } else {
        SchurRoute r;
        if (a.route == "tableaux") r = SchurRoute::tableaux;
        else if (a.route == "jacobi_trudi" || a.route == "jacobi-trudi") r = SchurRoute::jacobi_trudi;
        else if (a.route == "hamiltonian") r = SchurRoute::hamiltonian;
        else throw ConfigError("route must be tableaux, jacobi_trudi, hamiltonian or bialternant");
        v = supersym_schur(lam, mu, al, r);
    }
    return {{"command", "schur"}, {"lambda", lam.str()}, {"mu", mu.str()}, {"route", a.route}, {"value", v.str()}};
}

json compute_llt(const ComputeArgs& a) {
    if (a.n < 1 || a.n > 3) throw ConfigError("n must lie in [1, 3]");
    auto reg = make_registry();
    auto al = alphabet_arg(reg, a.alphabet);
    Partition lam = partition_arg(a.lambda), mu = partition_arg(a.mu);
    std::size_t pad = std::max(lam.length(), mu.length()) + static_cast<std::size_t>(lam.size());
    auto g = standard_g(reg, a.n, a.n == 3 ? Poly::var(reg, "c") : Poly(1));
    Poly v = llt_polynomial(lam.padded(pad), mu.padded(pad), al, a.n, g);
    return {{"command", "llt"}, {"lambda", lam.str()}, {"mu", mu.str()}, {"n", a.n}, {"value", v.str()}};
}

json compute_tau(const ComputeArgs& a) {
    auto reg = make_registry();
    auto al = alphabet_arg(reg, a.alphabet);
    StrictPartition lam = strict_arg(a.lambda), mu = strict_arg(a.mu);
    Sign s;
    if (a.sign == "plus") s = Sign::plus;
    else if (a.sign == "minus") s = Sign::minus;
    else throw ConfigError("sign must be plus or minus");
    HamiltonianParams H;
    H.sign = s;
    H.K = std::max(1, std::abs(lam.size() - mu.size()));
    H.s = supersymmetric_row_params(s == Sign::plus ? al : al.swapped(), H.K);
    Poly v = tau_function(mu, lam, H);
    return {{"command", "tau"}, {"lambda", lam.str()}, {"mu", mu.str()}, {"sign", a.sign}, {"value", v.str()}};
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"free fermionic lattice models: exact computations and checks", "fflcli"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a check and print a JSON report");
    std::string check;
    verify->add_option("check", check,
                       "match, match-charged, ybe, appendix, identities, boundaries, positivity, schur, wick, qfock, "
                       "tables or all")
        ->required();
    Flags flags;
    add_check_flags(verify, flags);

    auto* compute = app.add_subcommand("compute", "evaluate one quantity");
    compute->require_subcommand(1);
    ComputeArgs ca;
    auto common = [&](CLI::App* c) {
        c->add_option("--lambda", ca.lambda, "comma separated parts");
        c->add_option("--mu", ca.mu, "comma separated parts");
    };
    auto* pf = compute->add_subcommand("partition-function", "Z of a lattice model");
    common(pf);
    pf->add_option("--alpha", ca.alpha, "rows with a - right boundary edge");
    pf->add_option("--beta", ca.beta, "rows with a - left boundary edge");
    pf->add_option("--weights", ca.weights, "standard:<name> or weight-table JSON file");
    pf->add_option("--N", ca.N, "rows");
    pf->add_option("--M", ca.M, "largest column index");
    pf->add_option("--n", ca.n, "charge modulus for charged tables");
    pf->add_option("--method", ca.method, "transfer or brute");
    auto* sc = compute->add_subcommand("schur", "supersymmetric Schur polynomial");
    common(sc);
    sc->add_option("--alphabet", ca.alphabet, "alphabet sizes, e.g. x:2,y:1");
    sc->add_option("--route", ca.route, "tableaux, jacobi_trudi, hamiltonian or bialternant");
    auto* llt = compute->add_subcommand("llt", "supersymmetric LLT polynomial");
    common(llt);
    llt->add_option("--alphabet", ca.alphabet, "alphabet sizes");
    llt->add_option("--n", ca.n, "charge modulus");
    auto* tau = compute->add_subcommand("tau", "<mu| e^H |lambda> with supersymmetric parameters");
    common(tau);
    tau->add_option("--alphabet", ca.alphabet, "alphabet sizes");
    tau->add_option("--sign", ca.sign, "plus or minus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fflcli: " << e.what() << "\n";
        return 2;
    }

    try {
        json j;
        if (verify->parsed()) {
            CheckConfig cfg = build_config(check, flags);
            CheckReport r = run_check(cfg);
            j = r.to_json();
            j["config"] = cfg.to_json();
            out << j.dump(2) << "\n";
            return r.passed ? 0 : 1;
        }
        if (pf->parsed()) j = compute_partition_function(ca);
        else if (sc->parsed()) j = compute_schur(ca);
        else if (llt->parsed()) j = compute_llt(ca);
        else j = compute_tau(ca);
        j["schema"] = 1;
        out << j.dump(2) << "\n";
        return 0;
    } catch (const ConfigError& e) {
        err << "fflcli: " << e.what() << "\n";
        return 2;
    } catch (const LimitExceeded& e) {
        err << "fflcli: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "fflcli: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ffl
