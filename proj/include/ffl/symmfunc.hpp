#pragma once

#include "ffl/exactpoly.hpp"
#include "ffl/partitions.hpp"

#include <vector>

namespace ffl {

struct GFunction;

// s[k-1] holds s_k for 1 ≤ k ≤ K.
struct SymParams {
    std::vector<Poly> s;

    int K() const { return static_cast<int>(s.size()); }
    const Poly& at(int k) const;
};

Poly gen_p(const SymParams& s, int k);  // p_k = k s_k
Poly gen_h(const SymParams& s, int k);
Poly gen_e(const SymParams& s, int k);
// h_k via k h_k = Σ_r p_r h_{k-r}; independent route used in tests
Poly gen_h_recursive(const SymParams& s, int k);

// s_k ↦ (-1)^{k-1} s_k
SymParams omega(const SymParams& s);

// det h_{λ_i - μ_j - i + j}
Poly sigma_skew(const Partition& lam, const Partition& mu, const SymParams& s);
// det e_{λ'_i - μ'_j - i + j}
Poly sigma_skew_dual(const Partition& lam, const Partition& mu, const SymParams& s);

struct SuperAlphabet {
    std::vector<Poly> x;
    std::vector<Poly> y;

    std::size_t size() const { return x.size(); }
    SuperAlphabet swapped() const { return {y, x}; }
};

// x_1..x_N, y_1..y_N registered under the given prefixes.
SuperAlphabet make_alphabet(const RegistryPtr& reg, std::size_t N, const std::string& xname = "x",
                            const std::string& yname = "y");

// s_k = Σ_j (x_j^k + (-1)^{k-1} y_j^k) / k
SymParams supersymmetric_params(const SuperAlphabet& a, int K);
// per-row version for HamiltonianParams
std::vector<std::vector<Poly>> supersymmetric_row_params(const SuperAlphabet& a, int K);

enum class SchurRoute { hamiltonian, jacobi_trudi, tableaux };

Poly supersym_schur(const Partition& lam, const Partition& mu, const SuperAlphabet& a,
                    SchurRoute route);

// A_{λ+ρ}/A_ρ with A_λ = det((x_i|y)^{λ_j}) and (x|y)^r = (x+y_1)...(x+y_r);
// y_r is taken as 0 for r beyond the alphabet.
Poly supersym_schur_bialternant(const Partition& lam, const SuperAlphabet& a);

// ⟨μ+ρ| exp(L_+(x^n) - L_+(y^n)) |λ+ρ⟩ on the q-Fock space of g.
Poly llt_polynomial(const Partition& lam, const Partition& mu, const SuperAlphabet& a, int n,
                    const GFunction& g);

}  // namespace ffl
