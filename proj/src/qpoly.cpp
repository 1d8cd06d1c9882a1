#include "artin/qpoly.hpp"

#include <mutex>
#include <sstream>

namespace artin {

TPoly TPoly::divide_exact(const TPoly& d) const {
    if (d.is_zero()) throw std::domain_error("TPoly: division by zero");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::domain_error("TPoly: non-exact division");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
    const Int& lead = d.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int top = rem[k + d.degree()];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::domain_error("TPoly: non-exact division");
        quot[k] = q;
        for (size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= q * d.coeffs_[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("TPoly: non-exact division (remainder)");
    return TPoly(std::move(quot));
}

TPoly TPoly::divide_exact(const Int& k) const {
    if (k == 0) throw std::domain_error("TPoly: division by zero");
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), coeffs_[i].get_mpz_t(), k.get_mpz_t());
        if (r != 0) throw std::domain_error("TPoly: non-exact scalar division");
        out[i] = q;
    }
    return TPoly(std::move(out));
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const Int& c = coeffs_[e];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e >= 1) {
            if (a != 1) os << "*";
            os << "t";
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string QTPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        bool need_coeff = (a != 1) || (k.first == 0 && k.second == 0);
        if (need_coeff) os << a.get_str();
        if (k.first) {
            if (need_coeff) os << "*";
            os << "q";
            if (k.first > 1) os << "^" << k.first;
            need_coeff = true;
        }
        if (k.second) {
            if (need_coeff) os << "*";
            os << "t";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

QTPoly q_integer(unsigned m) {
    QTPoly r;
    if (m == 0) return QTPoly(Int(1)); // the paper's convention [0]_q := 1
    for (unsigned e = 0; e < m; ++e) r += QTPoly::q(e);
    return r;
}

namespace {

// Pascal recurrence: [m choose i]_q = [m-1 choose i-1]_q + q^i [m-1 choose i]_q.
// Filled row by row; degrees in this artifact never exceed ~30.
std::map<std::pair<unsigned, unsigned>, QTPoly> g_gauss_cache;
std::mutex g_gauss_mutex;
unsigned g_gauss_rows = 0; // rows [0, g_gauss_rows) are complete

} // namespace

QTPoly gauss_binomial(unsigned m, unsigned i) {
    if (i > m) throw std::domain_error("gauss_binomial: i > m");
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    for (unsigned r = g_gauss_rows; r <= m; ++r) {
        for (unsigned k = 0; k <= r; ++k) {
            if (k == 0 || k == r) {
                g_gauss_cache.emplace(std::make_pair(r, k), QTPoly(Int(1)));
            } else {
                g_gauss_cache.emplace(
                    std::make_pair(r, k),
                    g_gauss_cache.at({r - 1, k - 1}) + QTPoly::q(k) * g_gauss_cache.at({r - 1, k}));
            }
        }
    }
    if (m >= g_gauss_rows) g_gauss_rows = m + 1;
    return g_gauss_cache.at({m, i});
}

QTPoly primed_binomial(unsigned m, unsigned i) {
    if (i > m) throw std::domain_error("primed_binomial: i > m");
    QTPoly r = gauss_binomial(m, i);
    for (unsigned j = i; j < m; ++j)
        r *= QTPoly(Int(1)) + QTPoly::t() * QTPoly::q(j);
    return r;
}

Int gauss_binomial_m1(unsigned m, unsigned i) {
    if (i > m) throw std::domain_error("gauss_binomial_m1: i > m");
    if (m % 2 == 0 && i % 2 == 1) return Int(0);
    return binom(m / 2, i / 2);
}

TPoly primed_binomial_m1(unsigned m, unsigned i) {
    if (i > m) throw std::domain_error("primed_binomial_m1: i > m");
    TPoly r(gauss_binomial_m1(m, i));
    for (unsigned j = i; j < m; ++j) {
        // (1 + t q^j) at q = -1
        TPoly f = (j % 2 == 0) ? TPoly(Int(1)) + TPoly::t() : TPoly(Int(1)) - TPoly::t();
        r *= f;
    }
    return r;
}

} // namespace artin
