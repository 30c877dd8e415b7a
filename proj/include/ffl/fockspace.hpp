#pragma once

#include "ffl/exactpoly.hpp"
#include "ffl/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace ffl {

// Sites of the Maya diagram are labelled by integers: label p stands for the
// half-integer position p - 1/2. In |∅⟩ every label ≤ -1 is occupied.
// A basis state is a set of occupied labels ≥ 0 (a strict partition) plus a
// finite set of vacant labels ≤ -1 (sea holes).
struct MayaState {
    StrictPartition particles;
    std::vector<int> holes;  // strictly decreasing, all ≤ -1

    MayaState() = default;
    MayaState(StrictPartition p) : particles(std::move(p)) {}  // NOLINT
    MayaState(StrictPartition p, std::vector<int> h);

    bool hole_free() const { return holes.empty(); }
    bool occupied(int label) const;
    // number of occupied sites with label greater than `label`
    int occupied_above(int label) const;
    int highest_label() const;  // largest occupied label, or -1
    // Σ parts minus Σ hole labels; equals |λ| when hole-free and J_k lowers it by k
    int label_sum() const;
    int charge() const;  // number of parts minus number of holes
    MayaState with(int label, bool occ) const;

    bool operator==(const MayaState&) const = default;
    bool operator<(const MayaState& o) const;
    std::string str() const;
};

class FockVector {
public:
    using Map = std::map<MayaState, Poly>;

    FockVector() = default;
    explicit FockVector(const MayaState& s, Poly c = Poly(1));

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    void add(const MayaState& s, const Poly& c);
    Poly coefficient(const MayaState& s) const;
    bool hole_free() const;
    FockVector project_hole_free() const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector scaled(const Poly& c) const;
    bool operator==(const FockVector& o) const { return m_ == o.m_; }

    std::string str() const;

private:
    Map m_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);

class PairingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Creation and annihilation at label p (site p - 1/2).
FockVector apply_psi_star(int label, const FockVector& v);
FockVector apply_psi(int label, const FockVector& v);

// Coefficient of |bra⟩; v must not carry sea holes.
Poly vacuum_pairing(const StrictPartition& bra, const FockVector& v);

// J_k moves one particle k sites toward smaller labels.
FockVector apply_Jk(int k, const FockVector& v);

enum class Sign { plus, minus };

// Per-row coefficients s_k^{(j)}, 1 ≤ k ≤ K. With Sign::minus the row operator
// is φ_j = Σ_k s_k^{(j)} J_{-k}.
struct HamiltonianParams {
    Sign sign = Sign::plus;
    int K = 0;
    std::vector<std::vector<Poly>> s;  // s[j][k-1]

    std::size_t rows() const { return s.size(); }
    const Poly& coeff(std::size_t row, int k) const;
    // row-summed coefficients, i.e. H = Σ_k S_k J_{±k}
    std::vector<Poly> summed() const;
    HamiltonianParams single_row(std::size_t row) const;
};

// e^{φ_row} v, keeping only contributions of total displacement ≤ max_degree.
FockVector apply_exp_phi(const HamiltonianParams& H, std::size_t row, const FockVector& v,
                         int max_degree);

// e^{φ_N} ... e^{φ_1} v restricted to total displacement exactly `degree`.
FockVector apply_exp_H(const HamiltonianParams& H, const FockVector& v, int degree);

// ⟨μ| e^{H} |λ⟩.
Poly tau_function(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H);

// Jacobi–Trudi determinant in the h's of H (row-summed).
Poly wick_tau(const StrictPartition& mu, const StrictPartition& lam, const HamiltonianParams& H);

enum class UD { U, D };
FockVector apply_Uk_Dk(UD which, int k, const FockVector& v);

enum class BoundaryCase { A, B, C, D };

// e^{Φ_i} without the (x_i + y_i)^{-1} factor of cases B and D. The omitted
// denominator is returned separately.
struct BoundaryResult {
    FockVector numerator;
    Poly denominator;
};

BoundaryResult boundary_operator(BoundaryCase c, const HamiltonianParams& H, std::size_t row,
                                 const Poly& x_plus_y, int M, const FockVector& v, int max_degree);

}  // namespace ffl
