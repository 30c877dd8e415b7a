#pragma once

#include "ffl/exactpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ffl {

using Parts = std::vector<int>;

// Strictly decreasing, nonnegative parts. A trailing zero is a genuine part.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(Parts parts);  // throws std::invalid_argument

    const Parts& parts() const { return p_; }
    std::size_t length() const { return p_.size(); }
    int size() const;  // sum of parts
    int largest() const { return p_.empty() ? -1 : p_.front(); }
    bool contains(int part) const;
    int operator[](std::size_t i) const { return p_[i]; }

    bool operator==(const StrictPartition&) const = default;
    bool operator<(const StrictPartition& o) const { return p_ < o.p_; }
    std::string str() const;

private:
    Parts p_;
};

// Weakly decreasing, nonnegative, with an explicit length.
class Partition {
public:
    Partition() = default;
    explicit Partition(Parts parts);  // throws std::invalid_argument

    const Parts& parts() const { return p_; }
    std::size_t length() const { return p_.size(); }
    int size() const;
    int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }
    Partition padded(std::size_t len) const;
    Partition trimmed() const;  // trailing zeros removed

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return p_ < o.p_; }
    std::string str() const;

private:
    Parts p_;
};

StrictPartition rho_plus(const Partition& lam);
Partition rho_minus(const StrictPartition& lam);  // throws if some λ_i < ℓ−i
Partition rho(std::size_t len);

Partition conjugate(const Partition& lam, std::optional<std::size_t> pad_to = std::nullopt);

// ρ_{M+1} with the parts {M − λ_i} removed.
StrictPartition complement_reverse(const StrictPartition& lam, int M);

bool interleaves(const StrictPartition& lam, const StrictPartition& mu);

struct StrictBounds {
    std::optional<std::size_t> length;
    std::optional<std::size_t> max_length;
    std::optional<int> size;
};

// All strict partitions with parts in [0, max_part], ordered by size then
// lexicographically.
std::vector<StrictPartition> enumerate_strict(int max_part, const StrictBounds& b = {});

// Ordinary partitions of k (no zeros), in reverse lexicographic order.
std::vector<Partition> partitions_of(int k);

// Ordinary partitions with at most max_len parts and parts ≤ max_part, any size ≤ max_size.
std::vector<Partition> enumerate_partitions(int max_size, std::size_t max_len, int max_part);

Rational z_lambda(const Partition& lam);

// μ ⊆ λ as Young diagrams.
bool contained(const Partition& mu, const Partition& lam);

}  // namespace ffl
