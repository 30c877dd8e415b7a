#pragma once

#include "ffl/exactpoly.hpp"
#include "ffl/partitions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ffl {

// A + spin, or a - spin decorated with a charge in [0, n-1].
struct DecoratedSpin {
    bool minus = false;
    int charge = 0;

    static DecoratedSpin plus() { return {}; }
    static DecoratedSpin minus_with(int c) { return {true, c}; }

    bool operator==(const DecoratedSpin&) const = default;
    auto operator<=>(const DecoratedSpin&) const = default;
    std::string str() const;
};

// delta: rows numbered bottom to top, λ on the bottom boundary, paths run up
// and to the left, horizontal charge grows by one per step to the left.
// gamma: rows numbered top to bottom, λ on the top boundary, paths run down
// and to the left, horizontal charge grows by one per step to the right.
// In both cases row 1 touches the λ boundary, so every routine below works in
// an "in/out" frame: the in edge of a vertex faces λ, the out edge faces μ.
enum class Orientation { delta, gamma };

struct RowWeights {
    Poly a1, b1, c1, c2;
    std::vector<Poly> a2, b2;  // indexed by charge (see vertex_weight)
};

struct VertexWeights {
    Orientation orientation = Orientation::delta;
    int n = 1;
    std::vector<RowWeights> rows;

    std::size_t N() const { return rows.size(); }
    RegistryPtr registry() const;
};

// Row parameters of the standard families. f and h are indexed by charge and
// only used by the charged kinds.
struct StandardParams {
    std::vector<Poly> x, y, A, B;
    std::vector<Poly> f, h;

    std::size_t N() const { return x.size(); }
    int n() const { return f.empty() ? 1 : static_cast<int>(f.size()); }
};

// x1.., y1.., A1.., B1.. (and f0.., h0.. when n > 1)
StandardParams symbolic_params(const RegistryPtr& reg, std::size_t N, int n = 1);

enum class WeightKind { delta, gamma, delta_charged, gamma_charged };

VertexWeights standard_weights(WeightKind kind, const StandardParams& p);

// Weight of the vertex in the in/out frame, or nullptr when the configuration is
// not admissible. The charge index of a2/b2 is the right-hand charge for delta
// and the left-hand charge for gamma.
const Poly* vertex_weight(const VertexWeights& w, std::size_t row, const DecoratedSpin& left, bool in,
                          const DecoratedSpin& right, bool out);

// Geometric form: (left, top, right, bottom).
const Poly* vertex_weight_ltrb(const VertexWeights& w, std::size_t row, const DecoratedSpin& left, bool top,
                               const DecoratedSpin& right, bool bottom);

struct ModelSpec {
    VertexWeights weights;
    int M = 0;                  // columns 0..M
    StrictPartition lambda;     // in boundary
    StrictPartition mu;         // out boundary
    StrictPartition alpha;      // rows (1-based) whose right boundary edge is -
    StrictPartition beta;       // rows whose left boundary edge is -

    std::size_t N() const { return weights.N(); }
    void validate() const;      // throws std::invalid_argument
};

ModelSpec make_model(VertexWeights w, int M, StrictPartition lambda, StrictPartition mu,
                     StrictPartition alpha = {}, StrictPartition beta = {});

struct LatticeState {
    // horizontal[r][e]: edge e of row r (0-based row, r = 0 touches λ); edge e is
    // the left edge of column e, edge M + 1 the right boundary.
    std::vector<std::vector<DecoratedSpin>> horizontal;
    // vertical[l][c]: level l = 0 is the λ boundary, l = N the μ boundary.
    std::vector<std::vector<bool>> vertical;
};

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    std::size_t max_partial = 10'000'000;
};

std::vector<LatticeState> enumerate_states(const ModelSpec& m, const EnumerationLimits& lim = {});

Poly state_weight(const ModelSpec& m, const LatticeState& s);

enum class Method { brute, transfer };

Poly partition_function(const ModelSpec& m, Method method = Method::transfer, const EnumerationLimits& lim = {});

using Mask = std::uint64_t;
Mask to_mask(const StrictPartition& p);
StrictPartition from_mask(Mask m);

// One row: every out configuration reachable from `in` with the given side spins.
std::map<Mask, Poly> row_transfer(const VertexWeights& w, std::size_t row, int M, Mask in,
                                  const DecoratedSpin& right, const std::optional<DecoratedSpin>& left);

// Brute force with general side boundaries; α = β = ∅ gives partition_function.
Poly extended_boundary_Z(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& alpha,
                         const StrictPartition& beta, const VertexWeights& w, int M);

struct FreeFermionReport {
    bool zero_charge = false;
    bool charge_condition = false;
    bool independence = false;
    std::vector<Poly> delta_numerator;  // a1 a2(0) + b1 b2(0) - c1 c2 per row
};

FreeFermionReport free_fermion_check(const VertexWeights& w);

enum class Transform { rotate180, vertical_flip };

// Geometric transformation of the model. The result has the opposite
// orientation and exactly the same partition function.
ModelSpec transform_model(const ModelSpec& m, Transform which);

// c1 ↦ θ c1, c2 ↦ θ⁻¹ c2 in every row
VertexWeights rescale_c(const VertexWeights& w, const Poly& theta);

// ⟨μ|T̂_k|λ⟩ for a one-row charged delta model: columns k-n..k, right edge +,
// λ and μ agreeing outside the window. A - spin on the open left edge carries
// the factor b2(0)^{-1}.
Poly column_restricted_transfer(const VertexWeights& w, int k, const StrictPartition& lambda,
                                const StrictPartition& mu);

}  // namespace ffl
