#pragma once

#include "ffl/latticemodel.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace ffl {

// R-vertex weights for a row pair (i, j). Edges are top-left, bottom-left,
// top-right, bottom-right; the line through top-right and bottom-left carries
// row i, the other line row j. Charges are residues mod n.
struct RWeightTable {
    int n = 1;
    std::size_t i = 0, j = 1;
    Poly A1;
    std::vector<std::vector<Poly>> A2;   // A2[k][m]: top charges k, bottom charges m
    std::vector<std::vector<Poly>> A2x;  // A2x[k][m]: bottom-left k, bottom-right m, top-left m, top-right k
    std::vector<Poly> B1, B2, C1, C2;    // indexed by charge

    // nullptr when spin is not conserved
    const Poly* weight(const DecoratedSpin& tl, const DecoratedSpin& bl, const DecoratedSpin& tr,
                       const DecoratedSpin& br) const;
};

// Rows i and j must satisfy the generalized free fermion condition for a
// common g; throws std::invalid_argument otherwise. With check = false the formulas
// are evaluated regardless (negative controls).
RWeightTable r_weights_free_fermion(const VertexWeights& w, std::size_t i, std::size_t j, bool check = true);

// Second expression listed for A2x(k, m), k ≠ m.
Poly a2x_alternative(const VertexWeights& w, std::size_t i, std::size_t j, int k, int m);

// Rows i and j must satisfy the independence condition and
// Π_p a1(i) b2(j)(p) = Π_p a1(j) b2(i)(p); throws std::invalid_argument otherwise.
// Normalized by c1(j) c2(j), with the factor a1 a2(0) + b1 b2(0) on C1, C2 and
// A2(k, m), k ≠ m.
RWeightTable r_weights_nonff(const VertexWeights& w, std::size_t i, std::size_t j);

struct YbeCase {
    // α, β (left, bottom then top), γ (top), δ, ε (right, top then bottom), η (bottom)
    std::array<DecoratedSpin, 6> boundary;
    Poly lhs, rhs;

    std::string str() const;
};

struct YbeReport {
    bool passed = true;
    std::size_t cases = 0;
    std::vector<YbeCase> failures;
};

YbeReport check_ybe(const VertexWeights& w, const RWeightTable& r);

struct EquationResult {
    std::string name;
    bool passed = false;
    Poly residual;
};

// The equation list in ratio form, every instance over the charges, each checked
// after clearing denominators.
std::vector<EquationResult> check_appendix_suite(const VertexWeights& w, const RWeightTable& r);

bool all_passed(const std::vector<EquationResult>& eqs);

// Random two-row samples with rational weights.
// Generalized free fermion: a2(a) = g(a) b1 b2(a) / a1 with g(a) g(-a) = -g(0)
// and c1 c2 = a1 a2(0) + b1 b2(0).
VertexWeights random_gff_weights(std::mt19937_64& rng, int n, std::size_t rows = 2);
// Identical rows, generic weights (Δ ≠ 0 almost surely).
VertexWeights random_identical_rows(std::mt19937_64& rng, int n, std::size_t rows = 2);
// Zero-charge free fermion holds, the charge condition fails.
VertexWeights random_charge_broken(std::mt19937_64& rng, int n, std::size_t rows = 2);

}  // namespace ffl
