#pragma once

// Exact q-analog and (q,t)-analog combinatorics. All boundary coefficients of
// the Artin complexes come from these polynomials specialized at q = -1, so
// everything here is integer-exact; there is no floating point anywhere.

#include "artin/intmath.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace artin {

/// Polynomial in t with Int coefficients, dense, index = exponent.
/// Trailing zeros are stripped; the zero polynomial is the empty vector.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(Int c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    TPoly(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }

    static TPoly t(unsigned e = 1) {
        std::vector<Int> c(e + 1, Int(0));
        c[e] = 1;
        return TPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& operator[](size_t e) const {
        static const Int zero(0);
        return e < coeffs_.size() ? coeffs_[e] : zero;
    }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    TPoly& operator+=(const TPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator-(const TPoly& a) {
        TPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return TPoly(std::move(c));
    }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    TPoly& operator*=(const Int& k) {
        if (k == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= k;
        return *this;
    }
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

    Int eval(const Int& t) const {
        Int r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
        return r;
    }

    /// Exact division; throws std::domain_error if the remainder is nonzero.
    /// The divisor must have invertible (unit) leading coefficient over Z,
    /// or more generally the division must stay integral.
    TPoly divide_exact(const TPoly& d) const;

    /// Exact division by an integer scalar; throws on non-divisibility.
    TPoly divide_exact(const Int& k) const;

    std::string str() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

/// Bivariate polynomial in q and t with Int coefficients, exponent-map based.
/// Invariant: no stored zero coefficients.
class QTPoly {
  public:
    using Key = std::pair<unsigned, unsigned>; // (q exponent, t exponent)

    QTPoly() = default;
    explicit QTPoly(Int c) {
        if (c != 0) coeffs_[{0, 0}] = std::move(c);
    }
    static QTPoly q(unsigned e = 1) { return monomial(e, 0, Int(1)); }
    static QTPoly t(unsigned e = 1) { return monomial(0, e, Int(1)); }
    static QTPoly monomial(unsigned qe, unsigned te, Int c) {
        QTPoly p;
        if (c != 0) p.coeffs_[{qe, te}] = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Key, Int>& coeffs() const { return coeffs_; }
    Int coeff(unsigned qe, unsigned te) const {
        auto it = coeffs_.find({qe, te});
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    QTPoly& operator+=(const QTPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
        QTPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }
    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact substitution q = -1; the result carries only t.
    TPoly specialize_q_minus1() const {
        std::vector<Int> out;
        for (const auto& [k, c] : coeffs_) {
            if (k.second >= out.size()) out.resize(k.second + 1, Int(0));
            out[k.second] += (k.first % 2 == 0) ? c : -c;
        }
        return TPoly(std::move(out));
    }

    std::string str() const;

  private:
    void add(const Key& k, Int c) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(k, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    std::map<Key, Int> coeffs_;
};

/// [m]_q = 1 + q + ... + q^{m-1}, with [0]_q = 1.
QTPoly q_integer(unsigned m);

/// Gaussian binomial, computed by the Pascal-type recurrence (never by
/// dividing evaluated integers: numerator and denominator both vanish at
/// q = -1). Throws std::domain_error when i > m.
QTPoly gauss_binomial(unsigned m, unsigned i);

/// Primed (q,t)-binomial: gauss_binomial(m,i) * prod_{j=i}^{m-1} (1 + t q^j).
QTPoly primed_binomial(unsigned m, unsigned i);

/// Gaussian binomial specialized at q = -1, as a plain integer.
/// Equals binom(floor(m/2), floor(i/2)), or 0 when m is even and i odd.
Int gauss_binomial_m1(unsigned m, unsigned i);

/// Primed binomial specialized at q = -1, as a polynomial in t.
TPoly primed_binomial_m1(unsigned m, unsigned i);

} // namespace artin
