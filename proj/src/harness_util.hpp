#pragma once

#include "ffl/fockspace.hpp"
#include "ffl/harness.hpp"
#include "ffl/qfock.hpp"
#include "ffl/symmfunc.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ffl::detail {

using StrictPair = std::pair<StrictPartition, StrictPartition>;

// all (λ, μ) with ℓ(λ) = ℓ(μ) ≤ max_len and parts ≤ max_part
std::vector<StrictPair> strict_grid(int max_part, std::size_t max_len);

std::string pair_str(const StrictPartition& lam, const StrictPartition& mu);
std::string pair_str(const Partition& lam, const Partition& mu);
std::string short_str(const Poly& p, std::size_t cap = 400);
std::string mismatch(const Poly& lhs, const Poly& rhs);

// ∏ A_i^{M+1} B_i^{len}
Poly scale(const StandardParams& p, int M, std::size_t len);

Rational random_rational(std::mt19937_64& rng, bool allow_zero = false);

// symbolic x_i, y_i, A_i, B_i or random nonzero rationals
StandardParams classical_params(const RegistryPtr& reg, std::size_t N, SampleMode mode, std::mt19937_64& rng);

// n = 3 tables carry the twist c
GFunction g_table(const RegistryPtr& reg, int n);

// charged weights on the generalized free fermion line: y = x, h = g f
StandardParams charged_ff_params(const RegistryPtr& reg, std::size_t N, const GFunction& g, SampleMode mode,
                                 std::mt19937_64& rng);

HamiltonianParams super_hamiltonian(const SuperAlphabet& a, int K, Sign sign = Sign::plus);

// Hamiltonian parameters of the charged delta model (Sign::plus) and of the
// charged gamma model (Sign::minus) for row parameters p.
HamiltonianParams charged_delta_hamiltonian(const StandardParams& p, const GFunction& g, int K);
HamiltonianParams charged_gamma_hamiltonian(const StandardParams& p, const GFunction& g, int K);

// formal s_k^{(j)} named <prefix><k>_<j>
HamiltonianParams formal_hamiltonian(const RegistryPtr& reg, std::size_t N, int K, const std::string& prefix,
                                     Sign sign = Sign::plus);

// ρ_N = (N-1, ..., 0) and ρ⁺_N = (N, ..., 1) as strict partitions
StrictPartition staircase(std::size_t N);
StrictPartition staircase_plus(std::size_t N);

}  // namespace ffl::detail
