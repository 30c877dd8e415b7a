#include "ffl/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ffl {

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

int VarRegistry::index(const std::string& name) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = lookup_.find(name);
    if (it != lookup_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    lookup_.emplace(name, idx);
    return idx;
}

int VarRegistry::find(const std::string& name) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = lookup_.find(name);
    return it == lookup_.end() ? -1 : it->second;
}

const std::string& VarRegistry::name(int idx) const {
    std::lock_guard<std::mutex> lk(mu_);
    return names_.at(static_cast<std::size_t>(idx));
}

std::size_t VarRegistry::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return names_.size();
}

RegistryPtr make_registry() { return std::make_shared<VarRegistry>(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int v, int e) {
    Monomial m;
    if (e != 0) m.p_.push_back({v, e});
    return m;
}

int Monomial::exponent(int v) const {
    for (const auto& vp : p_)
        if (vp.var == v) return vp.exp;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& vp : p_) d += vp.exp;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.p_.reserve(p_.size() + o.p_.size());
    std::size_t i = 0, j = 0;
    while (i < p_.size() || j < o.p_.size()) {
        if (j == o.p_.size() || (i < p_.size() && p_[i].var < o.p_[j].var)) {
            r.p_.push_back(p_[i++]);
        } else if (i == p_.size() || o.p_[j].var < p_[i].var) {
            r.p_.push_back(o.p_[j++]);
        } else {
            int e = p_[i].exp + o.p_[j].exp;
            if (e != 0) r.p_.push_back({p_[i].var, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& vp : r.p_) vp.exp = -vp.exp;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& vp : r.p_) vp.exp *= k;
    return r;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
    if (c != 0) {
        t_.push_back({Monomial{}, c});
        t_[0].coef.canonicalize();
    }
}

Poly::Poly(RegistryPtr reg, const Rational& c) : Poly(c) { reg_ = std::move(reg); }

Poly Poly::var(const RegistryPtr& reg, const std::string& name, int e) {
    return monomial(reg, Monomial::var(reg->index(name), e));
}

Poly Poly::monomial(const RegistryPtr& reg, const Monomial& m, const Rational& c) {
    Poly p;
    p.reg_ = reg;
    if (c != 0) {
        p.t_.push_back({m, c});
        p.t_[0].coef.canonicalize();
    }
    return p;
}

Poly Poly::from_terms(RegistryPtr reg, std::vector<Term> terms) {
    Poly p;
    p.reg_ = std::move(reg);
    p.t_ = std::move(terms);
    for (auto& t : p.t_) t.coef.canonicalize();
    p.canonicalize();
    return p;
}

void Poly::canonicalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t_.size();) {
        std::size_t j = i + 1;
        Rational c = t_[i].coef;
        while (j < t_.size() && t_[j].mono == t_[i].mono) c += t_[j++].coef;
        if (c != 0) {
            if (out != i) t_[out].mono = std::move(t_[i].mono);
            t_[out].coef = c;
            ++out;
        }
        i = j;
    }
    t_.resize(out);
}

RegistryPtr Poly::join(const Poly& a, const Poly& b) {
    if (!a.reg_) return b.reg_;
    if (!b.reg_ || a.reg_ == b.reg_) return a.reg_;
    if (a.is_constant() || a.is_zero()) return b.reg_;
    if (b.is_constant() || b.is_zero()) return a.reg_;
    throw AlgebraError("polynomials from different variable registries");
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.empty()); }

Rational Poly::constant_term() const {
    for (const auto& t : t_)
        if (t.mono.empty()) return t.coef;
    return 0;
}

int Poly::min_exponent(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& t : t_) {
        int e = t.mono.exponent(v);
        if (first || e < m) m = e;
        first = false;
    }
    return m;
}

int Poly::max_exponent(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& t : t_) {
        int e = t.mono.exponent(v);
        if (first || e > m) m = e;
        first = false;
    }
    return m;
}

int Poly::max_total_degree() const {
    int m = 0;
    for (const auto& t : t_) m = std::max(m, t.mono.total_degree());
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.coef = -t.coef;
    return r;
}

static std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                           const std::vector<Poly::Term>& b, bool subtract) {
    std::vector<Poly::Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            r.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (c != 0) r.push_back({a[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.reg_ = Poly::join(a, b);
    r.t_ = merge_terms(a.t_, b.t_, false);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.reg_ = Poly::join(a, b);
    r.t_ = merge_terms(a.t_, b.t_, true);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.reg_ = Poly::join(a, b);
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const Poly& one = a.t_.size() == 1 ? a : b;
        const Poly& other = a.t_.size() == 1 ? b : a;
        const auto& m = one.t_[0];
        r.t_.reserve(other.t_.size());
        for (const auto& t : other.t_) r.t_.push_back({t.mono * m.mono, t.coef * m.coef});
        if (!m.mono.empty()) r.canonicalize();
        return r;
    }
    std::map<Monomial, Rational> acc;
    for (const auto& x : a.t_)
        for (const auto& y : b.t_) {
            auto [it, fresh] = acc.try_emplace(x.mono * y.mono, x.coef * y.coef);
            if (!fresh) it->second += x.coef * y.coef;
        }
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.t_.push_back({m, c});
    return r;
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly(reg_, 0);
    Poly r = *this;
    for (auto& t : r.t_) t.coef *= c;
    return r;
}

Poly Poly::times(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.t_) t.mono = t.mono * m;
    r.canonicalize();
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) {
        if (t_.size() != 1) throw AlgebraError("negative power of a non-monomial");
        Poly r;
        r.reg_ = reg_;
        Rational c = 1 / t_[0].coef;
        Rational cp = 1;
        for (int i = 0; i < -k; ++i) cp *= c;
        r.t_.push_back({t_[0].mono.pow(k), cp});
        return r;
    }
    Poly result(reg_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].mono == o.t_[i].mono) || t_[i].coef != o.t_[i].coef) return false;
    return true;
}

static bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // lexicographic on registry order: compare exponents of the smallest variable index first
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        int va = i < pa.size() ? pa[i].var : INT32_MAX;
        int vb = j < pb.size() ? pb[j].var : INT32_MAX;
        int v = std::min(va, vb);
        int ea = va == v ? pa[i].exp : 0;
        int eb = vb == v ? pb[j].exp : 0;
        if (ea != eb) return ea > eb;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : t_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return grlex_greater(a->mono, b->mono); });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (c == 1);
        if (!unit || t->mono.empty()) {
            os << c.get_str();
            if (!t->mono.empty()) os << "*";
        }
        bool firstvar = true;
        for (const auto& vp : t->mono.powers()) {
            if (!firstvar) os << "*";
            firstvar = false;
            os << (reg_ ? reg_->name(vp.var) : "v" + std::to_string(vp.var));
            if (vp.exp != 1) os << "^" << vp.exp;
        }
    }
    return os.str();
}

// ------------------------------------------------------------- utilities

Poly substitute(const Poly& p, const Bindings& b) {
    if (b.empty() || p.is_zero()) return p;
    const RegistryPtr& reg = p.registry();
    std::unordered_map<int, const Poly*> bound;
    for (const auto& [name, val] : b) {
        if (!reg) break;
        int idx = reg->find(name);
        if (idx >= 0) bound.emplace(idx, &val);
    }
    if (bound.empty()) return p;
    Poly result(reg, 0);
    std::map<std::pair<int, int>, Poly> powcache;
    auto power = [&](int v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powcache.find(key);
        if (it != powcache.end()) return it->second;
        const Poly& val = *bound.at(v);
        if (e < 0 && !val.is_monomial())
            throw AlgebraError("substituting a non-invertible value into a negative power of " +
                               reg->name(v));
        Poly pw = val.pow(e);
        return powcache.emplace(key, std::move(pw)).first->second;
    };
    for (const auto& t : p.terms()) {
        Monomial rest;
        Poly factor(reg, t.coef);
        for (const auto& vp : t.mono.powers()) {
            if (bound.count(vp.var))
                factor *= power(vp.var, vp.exp);
            else
                rest = rest * Monomial::var(vp.var, vp.exp);
        }
        result += factor.times(rest);
    }
    return result;
}

static std::vector<int> var_indices(const Poly& p, const std::vector<std::string>& vars) {
    std::vector<int> idx;
    if (!p.registry()) return idx;
    for (const auto& v : vars) {
        int i = p.registry()->find(v);
        if (i >= 0) idx.push_back(i);
    }
    return idx;
}

static int degree_in(const Monomial& m, const std::vector<int>& idx) {
    int d = 0;
    for (const auto& vp : m.powers())
        if (std::find(idx.begin(), idx.end(), vp.var) != idx.end()) d += vp.exp;
    return d;
}

Poly truncate(const Poly& p, const std::vector<std::string>& vars, int max_degree) {
    auto idx = var_indices(p, vars);
    std::vector<Poly::Term> kept;
    for (const auto& t : p.terms()) {
        for (const auto& vp : t.mono.powers())
            if (vp.exp < 0 && std::find(idx.begin(), idx.end(), vp.var) != idx.end())
                throw AlgebraError("negative exponent in a truncation variable");
        if (max_degree < 0 || degree_in(t.mono, idx) <= max_degree) kept.push_back(t);
    }
    return Poly::from_terms(p.registry(), std::move(kept));
}

Poly formal_exp(const Poly& p, const std::vector<std::string>& vars, int max_degree) {
    if (p.constant_term() != 0) throw AlgebraError("formal_exp needs zero constant term");
    if (max_degree < 0) throw AlgebraError("formal_exp needs a finite degree bound");
    Poly x = truncate(p, vars, max_degree);
    Poly result(p.registry(), 1);
    Poly term(p.registry(), 1);
    for (int m = 1; m <= max_degree; ++m) {
        term = truncate(term * x, vars, max_degree).scaled(Rational(1, m));
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

Poly formal_log1p(const Poly& p, const std::vector<std::string>& vars, int max_degree) {
    if (p.constant_term() != 0) throw AlgebraError("formal_log1p needs zero constant term");
    Poly x = truncate(p, vars, max_degree);
    Poly result(p.registry(), 0);
    Poly term(p.registry(), 1);
    for (int m = 1; m <= max_degree; ++m) {
        term = truncate(term * x, vars, max_degree);
        if (term.is_zero()) break;
        result += term.scaled(Rational(m % 2 ? 1 : -1, m));
    }
    return result;
}

Poly det(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("determinant of a non-square matrix");
    if (n == 0) return Poly(1);
    if (n > 20) throw AlgebraError("determinant too large for subset memoization");
    // dp over column subsets used by the first r rows
    std::unordered_map<std::uint32_t, Poly> cur{{0u, Poly(1)}};
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<std::uint32_t, Poly> next;
        for (const auto& [mask, val] : cur) {
            if (val.is_zero()) continue;
            int higher = 0;
            for (int c = static_cast<int>(n) - 1; c >= 0; --c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) {
                    ++higher;
                    continue;
                }
                const Poly& e = m[r][static_cast<std::size_t>(c)];
                if (e.is_zero()) continue;
                // sign of placing column c after the already chosen ones: columns chosen
                // earlier with larger index count as inversions
                Poly contrib = val * e;
                if (higher % 2) contrib = -contrib;
                auto [it, fresh] = next.try_emplace(mask | bit, contrib);
                if (!fresh) it->second += contrib;
            }
        }
        cur = std::move(next);
    }
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    auto it = cur.find(full);
    return it == cur.end() ? Poly(1) - Poly(1) : it->second;
}

Poly det_permutation_sum(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("determinant of a non-square matrix");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total(0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Poly prod(1);
        for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
        total += (inv % 2) ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// leading term in lex order on variable indices (larger exponent of the
// smallest index wins)
static const Poly::Term& lex_leading(const Poly& p) {
    const Poly::Term* best = &p.terms()[0];
    auto lex_greater = [](const Monomial& a, const Monomial& b) {
        const auto& pa = a.powers();
        const auto& pb = b.powers();
        std::size_t i = 0, j = 0;
        while (i < pa.size() || j < pb.size()) {
            int va = i < pa.size() ? pa[i].var : INT32_MAX;
            int vb = j < pb.size() ? pb[j].var : INT32_MAX;
            int v = std::min(va, vb);
            int ea = va == v ? pa[i].exp : 0;
            int eb = vb == v ? pb[j].exp : 0;
            if (ea != eb) return ea > eb;
            if (va == v) ++i;
            if (vb == v) ++j;
        }
        return false;
    };
    for (const auto& t : p.terms())
        if (lex_greater(t.mono, best->mono)) best = &t;
    return *best;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    if (a.is_zero()) return a;
    RegistryPtr reg = a.registry() ? a.registry() : b.registry();
    // shift both into ordinary polynomials
    auto shift_of = [](const Poly& p) {
        std::map<int, int> lo;
        for (const auto& t : p.terms())
            for (const auto& vp : t.mono.powers()) lo[vp.var] = std::min(lo[vp.var], vp.exp);
        Monomial s;
        for (auto [v, e] : lo)
            if (e < 0) s = s * Monomial::var(v, -e);
        return s;
    };
    Monomial sa = shift_of(a), sb = shift_of(b);
    Poly r = a.times(sa);
    Poly d = b.times(sb);
    const auto& lead = lex_leading(d);
    Poly q(reg, 0);
    std::size_t guard = 0;
    while (!r.is_zero()) {
        const auto& lr = lex_leading(r);
        Monomial qm = lr.mono * lead.mono.inverse();
        for (const auto& vp : qm.powers())
            if (vp.exp < 0) throw AlgebraError("inexact polynomial division");
        Poly t = Poly::monomial(reg, qm, lr.coef / lead.coef);
        q += t;
        r -= t * d;
        if (++guard > 1000000) throw AlgebraError("division did not terminate");
    }
    // a*sa = q * b*sb  =>  a/b = q * sb / sa
    return q.times(sb * sa.inverse());
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const RegistryPtr& reg;
    const std::string& s;
    std::size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw AlgebraError("parse error at " + std::to_string(pos) + " in '" + s + "': " + why);
    }
    long integer() {
        ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc.scaled(1 / d.constant_term());
            } else {
                return acc;
            }
        }
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        Poly b = atom();
        if (eat('^')) {
            ws();
            bool paren = eat('(');
            long e = integer();
            if (paren && !eat(')')) fail("expected )");
            b = b.pow(static_cast<int>(e));
        }
        return b;
    }
    Poly atom() {
        ws();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Poly(reg, Rational(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return Poly::var(reg, s.substr(start, pos - start));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parse_poly(const RegistryPtr& reg, const std::string& s) {
    Parser p{reg, s};
    Poly r = p.expr();
    p.ws();
    if (p.pos != s.size()) p.fail("trailing input");
    if (!r.registry()) r = Poly(reg, 0) + r;
    return r;
}

}  // namespace ffl
