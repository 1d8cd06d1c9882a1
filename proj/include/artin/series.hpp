#pragma once

// Truncated bivariate formal power series in (q, t) with exact integer
// coefficients, plus the three generating functions used for cross-checks.
// Infinite products are cut at the first factor whose minimal t-degree
// exceeds the truncation bound; within bounds all coefficients are exact.

#include "artin/intmath.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

class FormalSeries {
  public:
    FormalSeries(int maxq, int maxt)
        : maxq_(maxq), maxt_(maxt), c_((maxq + 1) * (maxt + 1), Int(0)) {
        if (maxq < 0 || maxt < 0) throw std::invalid_argument("negative truncation bound");
    }

    int maxq() const { return maxq_; }
    int maxt() const { return maxt_; }

    const Int& coeff(int qe, int te) const {
        if (qe < 0 || te < 0 || qe > maxq_ || te > maxt_)
            throw std::out_of_range("coefficient outside truncation bounds");
        return c_[idx(qe, te)];
    }
    void set(int qe, int te, Int v) { c_[idx(qe, te)] = std::move(v); }

    /// multiply in place by 1/(1 - q^a t^b); (a, b) != (0, 0), both >= 0
    FormalSeries& mul_inv_one_minus(int a, int b) {
        if (a == 0 && b == 0) throw std::invalid_argument("1/(1-1) is not a series");
        for (int qe = 0; qe <= maxq_; ++qe)
            for (int te = 0; te <= maxt_; ++te)
                if (qe >= a && te >= b) c_[idx(qe, te)] += c_[idx(qe - a, te - b)];
        return *this;
    }

    friend bool operator==(const FormalSeries& x, const FormalSeries& y) {
        return x.maxq_ == y.maxq_ && x.maxt_ == y.maxt_ && x.c_ == y.c_;
    }

  private:
    size_t idx(int qe, int te) const { return static_cast<size_t>(qe) * (maxt_ + 1) + te; }
    int maxq_, maxt_;
    std::vector<Int> c_;
};

/// qt^3/(1-t^2 q^2) * prod_{i>=0} 1/(1 - q^{2^i-1} t^{2^i}):
/// coefficient of q^i t^n = 2-rank of the degree-i group for odd n
inline FormalSeries series_odd_poincare(int maxq, int maxt) {
    FormalSeries s(maxq, maxt);
    if (maxq >= 1 && maxt >= 3) s.set(1, 3, Int(1));
    s.mul_inv_one_minus(2, 2);
    for (long i = 0, td = 1; td <= maxt; ++i, td = 1L << i)
        s.mul_inv_one_minus(static_cast<int>(td - 1), static_cast<int>(td));
    return s;
}

/// q/(1-q^2) * prod_{j>=1} 1/(1 - q^{2^j-1}): stable 2-ranks, univariate in q
inline FormalSeries series_stable(int maxq) {
    FormalSeries s(maxq, 0);
    if (maxq >= 1) s.set(1, 0, Int(1));
    s.mul_inv_one_minus(2, 0);
    for (long j = 1; (1L << j) - 1 <= maxq; ++j)
        s.mul_inv_one_minus(static_cast<int>((1L << j) - 1), 0);
    return s;
}

/// prod_{i>=0} 1/(1 - q^{2^i-1} t^{2^i}): coefficient of q^d t^n is
/// dim_{F_2} H_d(Br(n); F_2)
inline FormalSeries series_braid_f2(int maxq, int maxt) {
    FormalSeries s(maxq, maxt);
    s.set(0, 0, Int(1));
    for (long i = 0, td = 1; td <= maxt; ++i, td = 1L << i)
        s.mul_inv_one_minus(static_cast<int>(td - 1), static_cast<int>(td));
    return s;
}

struct SeriesDiff {
    int qe, te;
    Int series_value, computed_value;
};

/// empty result iff every provided (q-exp, t-exp) -> value entry matches
inline std::vector<SeriesDiff> compare(const FormalSeries& s,
                                       const std::map<std::pair<int, int>, long>& computed) {
    std::vector<SeriesDiff> out;
    for (const auto& [key, v] : computed) {
        const Int& sv = s.coeff(key.first, key.second);
        if (sv != v) out.push_back({key.first, key.second, sv, Int(v)});
    }
    return out;
}

} // namespace artin
