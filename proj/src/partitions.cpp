#include "ffl/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ffl {

static std::string parts_str(const Parts& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

StrictPartition::StrictPartition(Parts parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw std::invalid_argument("negative part in " + parts_str(p_));
        if (i && p_[i] >= p_[i - 1]) throw std::invalid_argument("not strict: " + parts_str(p_));
    }
}

int StrictPartition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

bool StrictPartition::contains(int part) const {
    return std::find(p_.begin(), p_.end(), part) != p_.end();
}

std::string StrictPartition::str() const { return parts_str(p_); }

Partition::Partition(Parts parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw std::invalid_argument("negative part in " + parts_str(p_));
        if (i && p_[i] > p_[i - 1])
            throw std::invalid_argument("not weakly decreasing: " + parts_str(p_));
    }
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

Partition Partition::padded(std::size_t len) const {
    if (len < p_.size()) {
        for (std::size_t i = len; i < p_.size(); ++i)
            if (p_[i] != 0) throw std::invalid_argument("cannot pad " + str() + " to shorter length");
        return Partition(Parts(p_.begin(), p_.begin() + static_cast<long>(len)));
    }
    Parts q = p_;
    q.resize(len, 0);
    return Partition(q);
}

Partition Partition::trimmed() const {
    Parts q = p_;
    while (!q.empty() && q.back() == 0) q.pop_back();
    return Partition(q);
}

std::string Partition::str() const { return parts_str(p_); }

StrictPartition rho_plus(const Partition& lam) {
    Parts q = lam.parts();
    std::size_t l = q.size();
    for (std::size_t i = 0; i < l; ++i) q[i] += static_cast<int>(l - 1 - i);
    return StrictPartition(q);
}

Partition rho_minus(const StrictPartition& lam) {
    Parts q = lam.parts();
    std::size_t l = q.size();
    for (std::size_t i = 0; i < l; ++i) {
        q[i] -= static_cast<int>(l - 1 - i);
        if (q[i] < 0) throw std::invalid_argument("cannot subtract rho from " + lam.str());
    }
    return Partition(q);
}

Partition rho(std::size_t len) {
    Parts q(len);
    for (std::size_t i = 0; i < len; ++i) q[i] = static_cast<int>(len - 1 - i);
    return Partition(q);
}

Partition conjugate(const Partition& lam, std::optional<std::size_t> pad_to) {
    int first = lam.length() ? lam[0] : 0;
    Parts q;
    for (int i = 1; i <= first; ++i) {
        int c = 0;
        for (int p : lam.parts())
            if (p >= i) ++c;
        q.push_back(c);
    }
    Partition r(q);
    return pad_to ? r.padded(*pad_to) : r;
}

StrictPartition complement_reverse(const StrictPartition& lam, int M) {
    if (lam.largest() > M) throw std::invalid_argument("complement_reverse needs M >= largest part");
    std::set<int> removed;
    for (int p : lam.parts()) removed.insert(M - p);
    Parts q;
    for (int v = M; v >= 0; --v)
        if (!removed.count(v)) q.push_back(v);
    return StrictPartition(q);
}

bool interleaves(const StrictPartition& lam, const StrictPartition& mu) {
    if (lam.length() != mu.length()) throw std::invalid_argument("interleaves: length mismatch");
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (mu[i] > lam[i]) return false;
        if (i + 1 < lam.length() && mu[i] < lam[i + 1]) return false;
    }
    return true;
}

std::vector<StrictPartition> enumerate_strict(int max_part, const StrictBounds& b) {
    std::vector<StrictPartition> out;
    if (max_part < -1) return out;
    int m = max_part + 1;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        Parts q;
        for (int v = m - 1; v >= 0; --v)
            if (mask & (1ull << v)) q.push_back(v);
        if (b.length && q.size() != *b.length) continue;
        if (b.max_length && q.size() > *b.max_length) continue;
        StrictPartition s(q);
        if (b.size && s.size() != *b.size) continue;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& c) {
        if (a.size() != c.size()) return a.size() < c.size();
        return a.parts() < c.parts();
    });
    return out;
}

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    Parts cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(k, k);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_size, std::size_t max_len, int max_part) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k)
        for (const auto& p : partitions_of(k))
            if (p.length() <= max_len && (p.length() == 0 || p[0] <= max_part)) out.push_back(p);
    return out;
}

Rational z_lambda(const Partition& lam) {
    std::map<int, int> mult;
    for (int p : lam.parts())
        if (p > 0) ++mult[p];
    mpz_class z = 1;
    for (auto [i, m] : mult) {
        for (int k = 0; k < m; ++k) z *= i;
        for (int k = 2; k <= m; ++k) z *= k;
    }
    return Rational(z);
}

bool contained(const Partition& mu, const Partition& lam) {
    std::size_t l = std::max(mu.length(), lam.length());
    for (std::size_t i = 0; i < l; ++i)
        if (mu[i] > lam[i]) return false;
    return true;
}

}  // namespace ffl
