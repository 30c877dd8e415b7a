#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ffl {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Named indeterminates. Indices are assigned on first use and never change.
class VarRegistry {
public:
    int index(const std::string& name);
    int find(const std::string& name) const;  // -1 if absent
    const std::string& name(int idx) const;
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> lookup_;
};

using RegistryPtr = std::shared_ptr<VarRegistry>;

RegistryPtr make_registry();

struct VarPower {
    int var;
    int exp;
    bool operator==(const VarPower&) const = default;
    auto operator<=>(const VarPower&) const = default;
};

// Sparse exponent vector sorted by variable index, zero exponents omitted.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int v, int e = 1);

    const std::vector<VarPower>& powers() const { return p_; }
    int exponent(int v) const;
    int total_degree() const;
    bool empty() const { return p_.empty(); }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return p_ < o.p_; }

private:
    std::vector<VarPower> p_;
};

class Poly;
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Sparse multivariate Laurent polynomial with rational coefficients.
// Terms are kept sorted by monomial with no zero coefficients, so equality is
// structural.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

    Poly() = default;
    Poly(long c);  // NOLINT: constants convert implicitly
    Poly(const Rational& c);  // NOLINT
    Poly(RegistryPtr reg, const Rational& c);

    static Poly var(const RegistryPtr& reg, const std::string& name, int e = 1);
    static Poly monomial(const RegistryPtr& reg, const Monomial& m, const Rational& c = 1);
    static Poly from_terms(RegistryPtr reg, std::vector<Term> terms);

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    bool is_monomial() const { return t_.size() == 1; }
    int min_exponent(int v) const;
    int max_exponent(int v) const;
    int max_total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly scaled(const Rational& c) const;
    Poly times(const Monomial& m) const;
    Poly pow(int k) const;  // negative k only for single-term polynomials

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    static RegistryPtr join(const Poly& a, const Poly& b);
    void canonicalize();

    RegistryPtr reg_;
    std::vector<Term> t_;
};

// Substitution: each bound variable is replaced by a polynomial.
using Bindings = std::map<std::string, Poly>;
Poly substitute(const Poly& p, const Bindings& b);

// Drops monomials whose total degree in `vars` exceeds max_degree.
// max_degree < 0 means no bound.
Poly truncate(const Poly& p, const std::vector<std::string>& vars, int max_degree);

// exp(p) modulo total degree > max_degree in vars. p must have zero constant term.
Poly formal_exp(const Poly& p, const std::vector<std::string>& vars, int max_degree);

// Formal logarithm log(1 + p) truncated, p with zero constant term.
Poly formal_log1p(const Poly& p, const std::vector<std::string>& vars, int max_degree);

using PolyMatrix = std::vector<std::vector<Poly>>;

// Cofactor expansion memoized on column subsets.
Poly det(const PolyMatrix& m);

// Reference determinant by the permutation sum; exponential, for tests.
Poly det_permutation_sum(const PolyMatrix& m);

// Exact quotient a / b; throws AlgebraError if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

// Parses strings such as "-q^2", "3/2*x1^2*y1 - A1^-1 + 1".
Poly parse_poly(const RegistryPtr& reg, const std::string& s);

}  // namespace ffl
