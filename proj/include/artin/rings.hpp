#pragma once

// Exact scalar rings used throughout the engine:
//   Int   (Z, gmp),  Rat (Q, gmp),  Fp (prime field, runtime modulus),
//   Poly<F> (F[t] for a field F; also Poly<Int> = Z[t] for boundary checks).
//
// Fp carries its modulus in a thread-local context: set it with FpScope
// before any Fp arithmetic on the current thread. Independent computations
// on different threads can use different primes.

#include "artin/intmath.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace artin {

struct FpCtx {
    static thread_local uint64_t modulus;
};

/// RAII guard selecting the active prime for Fp arithmetic on this thread.
class FpScope {
  public:
    explicit FpScope(uint64_t p) : saved_(FpCtx::modulus) {
        if (p < 2 || !is_prime(p)) throw std::domain_error("FpScope: modulus must be prime");
        FpCtx::modulus = p;
    }
    ~FpScope() { FpCtx::modulus = saved_; }
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

  private:
    uint64_t saved_;
};

struct Fp {
    uint64_t v = 0;

    Fp() = default;
    Fp(long x) {
        uint64_t p = FpCtx::modulus;
        long r = x % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        v = static_cast<uint64_t>(r);
    }
    explicit Fp(const Int& x) {
        Int m = x % Int(static_cast<unsigned long>(FpCtx::modulus));
        if (m < 0) m += Int(static_cast<unsigned long>(FpCtx::modulus));
        v = m.get_ui();
    }

    static uint64_t p() { return FpCtx::modulus; }

    friend Fp operator+(Fp a, Fp b) {
        Fp r;
        r.v = a.v + b.v;
        if (r.v >= p()) r.v -= p();
        return r;
    }
    friend Fp operator-(Fp a, Fp b) {
        Fp r;
        r.v = a.v >= b.v ? a.v - b.v : a.v + p() - b.v;
        return r;
    }
    friend Fp operator-(Fp a) {
        Fp r;
        r.v = a.v == 0 ? 0 : p() - a.v;
        return r;
    }
    friend Fp operator*(Fp a, Fp b) {
        Fp r;
        r.v = static_cast<uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % p());
        return r;
    }
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        int64_t t0 = 0, t1 = 1;
        uint64_t r0 = p(), r1 = v;
        while (r1 != 0) {
            uint64_t q = r0 / r1;
            uint64_t r2 = r0 - q * r1;
            int64_t t2 = t0 - static_cast<int64_t>(q) * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        int64_t t = t0;
        if (t < 0) t += static_cast<int64_t>(p());
        Fp r;
        r.v = static_cast<uint64_t>(t);
        return r;
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

/// Dense univariate polynomial over a coefficient ring F (index = exponent of t).
/// No trailing zero coefficients; zero polynomial = empty vector.
template <class F>
struct Poly {
    std::vector<F> c;

    Poly() = default;
    Poly(long x) {
        F v(x);
        if (!(v == F(0))) c.push_back(v);
    }
    explicit Poly(F v) {
        if (!(v == F(0))) c.push_back(std::move(v));
    }
    explicit Poly(std::vector<F> cs) : c(std::move(cs)) { trim(); }

    static Poly t(unsigned e = 1) {
        Poly r;
        r.c.assign(e + 1, F(0));
        r.c[e] = F(1);
        return r;
    }

    void trim() {
        while (!c.empty() && c.back() == F(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    F coeff(size_t e) const { return e < c.size() ? c[e] : F(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), F(0));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), F(0));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }

    /// Division with remainder (requires field coefficients).
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        q = Poly{};
        r = a;
        if (a.degree() < b.degree()) return;
        q.c.assign(a.c.size() - b.c.size() + 1, F(0));
        F lead_inv = F(1) / b.c.back();
        for (int k = static_cast<int>(q.c.size()) - 1; k >= 0; --k) {
            F top = r.coeff(k + b.degree());
            if (top == F(0)) continue;
            F f = top * lead_inv;
            q.c[k] = f;
            if (r.c.size() < static_cast<size_t>(k + b.degree() + 1))
                r.c.resize(k + b.degree() + 1, F(0));
            for (size_t j = 0; j < b.c.size(); ++j) r.c[k + j] -= f * b.c[j];
        }
        q.trim();
        r.trim();
    }

    std::string str(const char* var = "t") const;
};

template <class F>
std::string coeff_str(const F& v);

template <class F>
std::string Poly<F>::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e] == F(0)) continue;
        if (!first) os << " + ";
        os << coeff_str(c[e]);
        if (e >= 1) os << "*" << var << (e > 1 ? "^" + std::to_string(e) : "");
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Ring traits for the generic linear algebra.
// A EuclideanRing provides division with remainder and a norm; fields are
// the degenerate case (every nonzero element is a unit).

template <class R>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static constexpr bool is_field = false;
    static bool is_zero(const Int& a) { return a == 0; }
    static bool is_unit(const Int& a) { return a == 1 || a == -1; }
    // norm for pivot choice; zero only for the zero element
    static Int norm(const Int& a) { return abs(a); }
    static bool norm_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
    /// round-to-nearest quotient, so |a - q b| <= |b|/2
    static Int quot(const Int& a, const Int& b) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        // with floor division r has the sign of b; bumping q by one always
        // shrinks |r| when it exceeds |b|/2
        if (abs(r) * 2 > abs(b)) q += 1;
        return q;
    }
    static bool divides(const Int& a, const Int& b) {
        if (a == 0) return b == 0;
        return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
    }
    static Int exact_div(const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    /// canonical associate (positive); returns unit u with a = u * canonical(a)
    static Int canonical_unit(const Int& a) { return a < 0 ? Int(-1) : Int(1); }
    static std::string str(const Int& a) { return a.get_str(); }
};

template <>
struct ring_traits<Rat> {
    static constexpr bool is_field = true;
    static bool is_zero(const Rat& a) { return a == 0; }
    static bool is_unit(const Rat& a) { return a != 0; }
    static Rat inv(const Rat& a) { return Rat(1) / a; }
    static std::string str(const Rat& a) { return a.get_str(); }
};

template <>
struct ring_traits<Fp> {
    static constexpr bool is_field = true;
    static bool is_zero(const Fp& a) { return a.v == 0; }
    static bool is_unit(const Fp& a) { return a.v != 0; }
    static Fp inv(const Fp& a) { return a.inv(); }
    static std::string str(const Fp& a) { return std::to_string(a.v); }
};

template <class F>
struct ring_traits<Poly<F>> {
    static constexpr bool is_field = false;
    static bool is_zero(const Poly<F>& a) { return a.is_zero(); }
    static bool is_unit(const Poly<F>& a) { return a.degree() == 0; }
    static int norm(const Poly<F>& a) { return a.degree() + 1; }
    static bool norm_less(const Poly<F>& a, const Poly<F>& b) { return a.degree() < b.degree(); }
    static Poly<F> quot(const Poly<F>& a, const Poly<F>& b) {
        Poly<F> q, r;
        Poly<F>::divmod(a, b, q, r);
        return q;
    }
    static bool divides(const Poly<F>& a, const Poly<F>& b) {
        if (a.is_zero()) return b.is_zero();
        Poly<F> q, r;
        Poly<F>::divmod(b, a, q, r);
        return r.is_zero();
    }
    static Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
        Poly<F> q, r;
        Poly<F>::divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("Poly: non-exact division");
        return q;
    }
    /// canonical associate is monic
    static Poly<F> canonical_unit(const Poly<F>& a) {
        return a.is_zero() ? Poly<F>(1) : Poly<F>(a.c.back());
    }
    static std::string str(const Poly<F>& a) { return a.str(); }
};

template <class F>
inline std::string coeff_str(const F& v) {
    return ring_traits<F>::str(v);
}

} // namespace artin
