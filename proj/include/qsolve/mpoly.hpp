#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsolve/rational.hpp"
#include "qsolve/symbols.hpp"

namespace qsolve {

/// Sparse exponent vector: sorted (variable index, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<uint32_t, uint32_t>> e;

    static Monomial unit() { return {}; }
    static Monomial var(uint32_t v, uint32_t exp = 1) {
        Monomial m;
        if (exp) m.e.push_back({v, exp});
        return m;
    }

    bool is_unit() const { return e.empty(); }
    uint32_t total_degree() const {
        uint32_t d = 0;
        for (auto& [v, x] : e) d += x;
        return d;
    }
    uint32_t exponent(uint32_t v) const {
        for (auto& [w, x] : e)
            if (w == v) return x;
        return 0;
    }
    uint32_t max_var() const { return e.empty() ? 0 : e.back().first; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
                r.e.push_back(a.e[i++]);
            } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
                r.e.push_back(b.e[j++]);
            } else {
                r.e.push_back({a.e[i].first, a.e[i].second + b.e[j].second});
                ++i;
                ++j;
            }
        }
        return r;
    }

    bool divides(const Monomial& m) const {
        size_t j = 0;
        for (auto& [v, x] : e) {
            while (j < m.e.size() && m.e[j].first < v) ++j;
            if (j == m.e.size() || m.e[j].first != v || m.e[j].second < x) return false;
        }
        return true;
    }

    /// m / *this, assuming divisibility
    Monomial divide_into(const Monomial& m) const {
        Monomial r;
        size_t i = 0;
        for (auto& [v, x] : m.e) {
            uint32_t sub = 0;
            while (i < e.size() && e[i].first < v) ++i;
            if (i < e.size() && e[i].first == v) sub = e[i].second;
            if (x > sub) r.e.push_back({v, x - sub});
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
                r.e.push_back(a.e[i++]);
            } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
                r.e.push_back(b.e[j++]);
            } else {
                r.e.push_back({a.e[i].first, std::max(a.e[i].second, b.e[j].second)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        size_t i = 0, j = 0;
        while (i < a.e.size() && j < b.e.size()) {
            if (a.e[i].first < b.e[j].first) ++i;
            else if (b.e[j].first < a.e[i].first) ++j;
            else return false;
        }
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

    std::string to_string(const SymbolTable* syms = nullptr) const {
        if (e.empty()) return "1";
        std::string s;
        for (auto& [v, x] : e) {
            if (!s.empty()) s += "*";
            s += syms ? syms->at(v).name() : "x" + std::to_string(v);
            if (x > 1) s += "^" + std::to_string(x);
        }
        return s;
    }
};

enum class MonomialOrder { Grevlex, Lex };

/// strict "a comes after b" comparison: returns true iff a < b in the order.
/// Variable 0 is the most significant.
inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (ord == MonomialOrder::Grevlex) {
        uint32_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        // a < b iff the rightmost variable where they differ has a-exponent > b-exponent
        size_t i = a.e.size(), j = b.e.size();
        while (i > 0 || j > 0) {
            uint32_t va = i ? a.e[i - 1].first : 0, vb = j ? b.e[j - 1].first : 0;
            if (i && (!j || va > vb)) return true;  // a has extra weight in a later variable
            if (j && (!i || vb > va)) return false;
            // same variable
            if (a.e[i - 1].second != b.e[j - 1].second) return a.e[i - 1].second > b.e[j - 1].second;
            --i;
            --j;
        }
        return false;
    }
    // Lex
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
        uint32_t va = i < a.e.size() ? a.e[i].first : UINT32_MAX;
        uint32_t vb = j < b.e.size() ? b.e[j].first : UINT32_MAX;
        if (va < vb) return false;  // a has the more significant variable
        if (vb < va) return true;
        if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
        ++i;
        ++j;
    }
    return false;
}

struct MonoGrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(b, a, MonomialOrder::Grevlex); }
};

/// Sparse multivariate polynomial over Rational in the SymbolId variables.
/// Terms are stored grevlex-descending, so begin() is the grevlex leading term.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonoGrevlexGreater>;

    MPoly() = default;
    MPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) t_[Monomial::unit()] = c;
    }
    static MPoly var(uint32_t v) {
        MPoly p;
        p.t_[Monomial::var(v)] = Rational(1);
        return p;
    }
    static MPoly term(Monomial m, const Rational& c) {
        MPoly p;
        if (!c.is_zero()) p.t_[std::move(m)] = c;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_.begin()->first.is_unit() && t_.begin()->second.is_one(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit()); }
    Rational constant_value() const {
        if (t_.empty()) return Rational(0);
        auto it = t_.find(Monomial::unit());
        return it == t_.end() ? Rational(0) : it->second;
    }

    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    uint32_t total_degree() const {
        uint32_t d = 0;
        for (auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }
    uint32_t nvars_bound() const {
        uint32_t n = 0;
        for (auto& [m, c] : t_)
            if (!m.is_unit()) n = std::max(n, m.max_var() + 1);
        return n;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly scaled(const Rational& s) const {
        if (s.is_zero()) return MPoly();
        MPoly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a.t_ == b.t_); }

    /// canonical form for equation dedup: leading (grevlex) coefficient 1
    MPoly normalized() const {
        if (t_.empty()) return *this;
        return scaled(t_.begin()->second.inv());
    }

    /// substitute values for variables; T needs T(Rational), +, *.
    template <class T>
    T eval(const std::vector<T>& values) const {
        // power cache per variable
        std::vector<std::vector<T>> powers(values.size());
        T acc{Rational(0)};
        for (auto& [m, c] : t_) {
            T term{c};
            for (auto& [v, x] : m.e) {
                auto& pv = powers.at(v);
                if (pv.empty()) pv.push_back(T{Rational(1)});
                while (pv.size() <= x) pv.push_back(pv.back() * values.at(v));
                term = term * pv[x];
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string to_string(const SymbolTable* syms = nullptr) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            if (m.is_unit()) {
                s += c.to_string();
            } else if (c.is_one()) {
                s += m.to_string(syms);
            } else {
                s += c.to_string() + "*" + m.to_string(syms);
            }
        }
        return s;
    }

  private:
    TermMap t_;
};

}  // namespace qsolve
