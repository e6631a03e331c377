#pragma once

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qsolve/errors.hpp"
#include "qsolve/rational.hpp"

namespace qsolve {

// Dense univariate polynomial in the spectral parameter u over a coefficient
// ring R. R must provide: default ctor (= 0), construction from Rational,
// +, -, *, unary -, ==, is_zero(), is_one().
// Coefficients are stored lowest degree first with no trailing zeros.
template <class R>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return constant(R(Rational(1))); }
    static UPoly constant(R v) {
        UPoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    /// u^k
    static UPoly monomial(size_t k, R v = R(Rational(1))) {
        UPoly p;
        if (!v.is_zero()) {
            p.c_.assign(k + 1, R());
            p.c_[k] = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// degree; -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(size_t k) const { return k < c_.size() ? c_[k] : R(); }
    const R& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// index of the lowest nonzero coefficient; -1 for zero
    int valuation() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    /// divide by u^k (exact only if valuation >= k; lower coefficients dropped)
    UPoly shift_down(size_t k) const {
        if (c_.size() <= k) return UPoly();
        UPoly p;
        p.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
        p.trim();
        return p;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a.c_ == b.c_); }

    UPoly scaled(const Rational& s) const {
        if (s.is_zero()) return UPoly();
        UPoly r = *this;
        R sr{s};
        for (auto& x : r.c_) x = x * sr;
        return r;
    }

    /// f(u + delta), exact binomial expansion; degree preserved.
    UPoly shift(const Rational& delta) const {
        if (delta.is_zero() || is_zero()) return *this;
        size_t n = c_.size();
        std::vector<R> out(n, R());
        // powers of delta
        std::vector<Rational> dp(n);
        dp[0] = Rational(1);
        for (size_t i = 1; i < n; ++i) dp[i] = dp[i - 1] * delta;
        for (size_t j = 0; j < n; ++j) {
            if (c_[j].is_zero()) continue;
            for (size_t k = 0; k <= j; ++k) {
                Rational w = binomial(static_cast<unsigned>(j), static_cast<unsigned>(k)) * dp[j - k];
                if (!w.is_zero()) out[k] = out[k] + c_[j] * R(w);
            }
        }
        UPoly r;
        r.c_ = std::move(out);
        r.trim();
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        UPoly r;
        r.c_.resize(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * R(Rational(static_cast<int>(k)));
        r.trim();
        return r;
    }

    R eval(const Rational& x) const {
        R acc;
        R xr{x};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * xr + c_[i];
        return acc;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return UPoly<S>(std::move(out));
    }

    std::string to_string(const std::string& var = "u") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<R> c_;
};

/// f = g*quotient + remainder with deg remainder < deg g; g must be monic.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divmod_monic(const UPoly<R>& f, const UPoly<R>& g) {
    if (g.is_zero() || !g.is_monic()) throw NonMonicDivisor();
    int dg = g.degree();
    if (dg == 0) return {f, UPoly<R>()};
    std::vector<R> rem(f.coeffs());
    int df = f.degree();
    if (df < dg) return {UPoly<R>(), f};
    std::vector<R> quo(static_cast<size_t>(df - dg + 1), R());
    for (int k = df; k >= dg; --k) {
        R c = rem[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        quo[static_cast<size_t>(k - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<size_t>(k - dg + j)] = rem[static_cast<size_t>(k - dg + j)] - c * g.coeff(static_cast<size_t>(j));
    }
    rem.resize(static_cast<size_t>(dg));
    return {UPoly<R>(std::move(quo)), UPoly<R>(std::move(rem))};
}

/// f⁺g⁻ − f⁻g⁺ with ħ = 1 (shifts by ±1/2).
template <class R>
UPoly<R> wronskian(const UPoly<R>& f, const UPoly<R>& g) {
    Rational half(1, 2);
    return f.shift(half) * g.shift(-half) - f.shift(-half) * g.shift(half);
}

// ---- Rational-coefficient specifics ----

using UPolyQ = UPoly<Rational>;

inline UPolyQ monic(const UPolyQ& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.lc().inv());
}

/// monic gcd; gcd(f, 0) = monic(f).
inline UPolyQ gcd(UPolyQ a, UPolyQ b) {
    while (!b.is_zero()) {
        b = monic(b);
        auto [q, r] = divmod_monic(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a);
}

/// extended gcd: returns (g, s, t) monic with s*a + t*b = g.
inline std::tuple<UPolyQ, UPolyQ, UPolyQ> ext_gcd(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ r0 = a, r1 = b;
    UPolyQ s0 = UPolyQ::one(), s1 = UPolyQ::zero();
    UPolyQ t0 = UPolyQ::zero(), t1 = UPolyQ::one();
    while (!r1.is_zero()) {
        Rational l = r1.lc();
        UPolyQ r1m = r1.scaled(l.inv());
        auto [q, r] = divmod_monic(r0, r1m);
        UPolyQ qscaled = q.scaled(l.inv());
        UPolyQ r2 = r;  // r0 - q/l * r1... note divmod gives r0 = r1m*q + r = r1*(q/l) + r
        UPolyQ s2 = s0 - qscaled * s1;
        UPolyQ t2 = t0 - qscaled * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational l = r0.lc().inv();
    return {r0.scaled(l), s0.scaled(l), t0.scaled(l)};
}

inline UPolyQ squarefree_part(const UPolyQ& f) {
    if (f.degree() <= 0) return f.is_zero() ? f : UPolyQ::one();
    UPolyQ g = gcd(f, f.derivative());
    auto [q, r] = divmod_monic(monic(f), monic(g));
    assert(r.is_zero());
    return monic(q);
}

/// Right inverse of f ↦ f⁺ − f⁻ on polynomials, normalized with zero
/// constant term: returns f with f(u+1/2) − f(u−1/2) = g, deg f = deg g + 1.
inline UPolyQ psi_inverse(const UPolyQ& g) {
    if (g.is_zero()) return UPolyQ();
    int n = g.degree();
    std::vector<Rational> f(static_cast<size_t>(n) + 2, Rational(0));
    Rational half(1, 2);
    // (f⁺ − f⁻)_j = Σ_{k>j, k−j odd} f_k · C(k,j) · 2·(1/2)^{k−j}; solve top-down.
    for (int j = n; j >= 0; --j) {
        Rational acc = g.coeff(static_cast<size_t>(j));
        for (int k = j + 2; k <= n + 1; ++k) {
            if ((k - j) % 2 == 0) continue;
            Rational w = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * half.pow(static_cast<unsigned>(k - j - 1));
            acc -= f[static_cast<size_t>(k)] * w;
        }
        // coefficient of f_{j+1}: C(j+1, j)·2·(1/2)^1 = j+1
        f[static_cast<size_t>(j) + 1] = acc / Rational(j + 1);
    }
    f[0] = Rational(0);
    return UPolyQ(std::move(f));
}

template <class R>
std::string UPoly<R>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string term;
        bool unit = c_[k].is_one();
        std::string cs;
        if constexpr (std::is_same_v<R, Rational>) {
            cs = c_[k].to_string();
        } else {
            cs = "(" + c_[k].to_string() + ")";
        }
        if (k == 0) {
            term = cs;
        } else {
            std::string mono = (k == 1) ? var : var + "^" + std::to_string(k);
            term = unit ? mono : cs + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

}  // namespace qsolve
