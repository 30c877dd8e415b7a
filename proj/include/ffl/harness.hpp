#pragma once

#include "ffl/latticemodel.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffl {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SampleMode { symbolic, random };

struct CheckConfig {
    std::string check = "all";
    int max_part = 4;
    std::size_t max_length = 3;
    int max_size = 5;  // |λ| bound for the ordinary-partition grids
    std::size_t N = 2;
    int M = 6;
    std::optional<int> M_min;  // defaults to M
    int n = 3;
    int degree = 4;
    SampleMode mode = SampleMode::symbolic;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string weights;  // empty, standard:<name>, or a JSON file path
    bool timing = false;

    int m_low() const { return M_min.value_or(M); }
    void validate() const;  // throws ConfigError

    nlohmann::json to_json() const;
    static CheckConfig from_json(const nlohmann::json& j);  // throws ConfigError
};

struct Failure {
    std::string instance;
    std::string detail;
};

// One family of instances inside a check. A negative control passes when a
// witness is found.
struct Section {
    Section() = default;
    explicit Section(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool negative_control = false;
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> failures;  // first few only
    std::string witness;

    void record(bool ok, const std::string& instance, const std::string& detail = {});
    void expect_witness(bool found, const std::string& instance);
};

struct CheckReport {
    std::string check;
    bool passed = true;
    std::vector<Section> sections;
    std::vector<std::string> findings;
    std::vector<std::string> notes;
    std::optional<double> wall_ms;

    std::size_t instances() const;
    void add(Section s);
    void merge(const CheckReport& other);
    nlohmann::json to_json() const;
};

// Names: standard:delta, standard:gamma, standard:charged-ff(n),
// standard:nonff-identical-rows(n); anything else is read as a JSON file
// {"orientation": "delta", "n": 1, "rows": [{"a1": "...", ..., "a2": [...], "b2": [...]}]}.
// `n` is used when the name carries no modulus.
VertexWeights weights_from_name(const RegistryPtr& reg, const std::string& name, std::size_t N, int n);
VertexWeights weights_from_json(const RegistryPtr& reg, const nlohmann::json& j);

// Every variable replaced by a random nonzero rational.
VertexWeights specialize_random(const VertexWeights& w, std::mt19937_64& rng);

CheckReport check_match_classical(const CheckConfig& cfg);
CheckReport check_match_charged(const CheckConfig& cfg);
CheckReport check_schur_routes(const CheckConfig& cfg);
CheckReport check_wick(const CheckConfig& cfg);
CheckReport check_ybe_suite(const CheckConfig& cfg);
CheckReport check_appendix(const CheckConfig& cfg);
// ybe and appendix on user-supplied weights, every ordered row pair
CheckReport check_ybe_weights(const CheckConfig& cfg, const VertexWeights& w);

enum class Identity { cauchy_classical, cauchy_llt, branching, pieri, lgv, involution, duality };
const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
CheckReport check_identities(const CheckConfig& cfg, Identity which);
CheckReport check_identities(const CheckConfig& cfg);

CheckReport check_boundaries(const CheckConfig& cfg);
CheckReport check_positivity(const CheckConfig& cfg);
CheckReport check_qfock(const CheckConfig& cfg);
CheckReport check_tables(const CheckConfig& cfg);

// Dispatch on cfg.check: match, match-charged, ybe, appendix, identities,
// boundaries, positivity, schur, wick, qfock, tables, all. `all` runs the first
// seven.
CheckReport run_check(const CheckConfig& cfg);

}  // namespace ffl
