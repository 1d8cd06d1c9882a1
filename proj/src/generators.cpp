#include "artin/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace artin {

int x_slots(long p, int i) {
    if (i < 0) throw std::invalid_argument("x_slots: negative index");
    if (p == 0) {
        if (i > 1) throw std::invalid_argument("x_slots: only x_0, x_1 exist in characteristic 0");
        return i + 1;
    }
    if (p == 2) {
        if (i >= 30) throw std::invalid_argument("x_slots: index too large");
        return 1 << i;
    }
    long r = 2;
    for (int k = 0; k < i; ++k) {
        r *= p;
        if (r > (1L << 30)) throw std::invalid_argument("x_slots: index too large");
    }
    return static_cast<int>(r);
}

namespace {

std::vector<int> block_lengths(const ZMonomial& m) {
    std::vector<int> out;
    if (m.c >= 1) out.push_back(m.c + 1);
    for (int k = 0; k < m.hs; ++k) out.push_back(1);
    for (int i : m.xs) out.push_back(x_slots(m.p, i));
    if (out.empty()) throw std::invalid_argument("ZMonomial: empty monomial");
    return out;
}

}  // namespace

int ZMonomial::slots() const {
    int n = 0;
    for (int l : block_lengths(*this)) n += l;
    return n - 1;  // the final 0 is dropped
}

int ZMonomial::degree() const {
    // each block 1...10 contributes length-1 ones; dropping the final 0
    // does not change the 1-count
    int d = 0;
    for (int l : block_lengths(*this)) d += l - 1;
    return d;
}

Cell ZMonomial::cell() const {
    auto blocks = block_lengths(*this);
    Cell c = 0;
    int emitted = 0;
    const int n = slots();
    for (int l : blocks)
        for (int k = 0; k < l && emitted < n; ++k, ++emitted) c = (c << 1) | (k < l - 1 ? 1u : 0u);
    return c;
}

std::string ZMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << " ";
        os << s;
        first = false;
    };
    if (c >= 1) emit("z" + std::to_string(c));
    if (hs > 0) emit(hs == 1 ? "h" : "h^" + std::to_string(hs));
    for (size_t k = 0; k < xs.size();) {
        size_t j = k;
        while (j < xs.size() && xs[j] == xs[k]) ++j;
        std::string s = "x" + std::to_string(xs[k]);
        if (j - k > 1) s += "^" + std::to_string(j - k);
        emit(s);
        k = j;
    }
    return os.str();
}

namespace {

TPoly tpoly_pow(const TPoly& a, int e) {
    TPoly r(Int(1));
    for (int k = 0; k < e; ++k) r *= a;
    return r;
}

TPoly one_plus_t_int() { return TPoly(std::vector<Int>{Int(1), Int(1)}); }
TPoly one_minus_t2_int() { return TPoly(std::vector<Int>{Int(1), Int(0), Int(-1)}); }

}  // namespace

std::vector<ZClass> rational_laurent_classes(int n) {
    std::vector<ZClass> out;
    for (int i = 0; 2 * i + 1 <= n; ++i) {
        int j = n - 2 * i;
        if (j < 1) continue;
        ZClass z;
        z.mon.c = 2 * i + 1;
        z.mon.xs.assign(j - 1, 0);
        z.mon.p = 0;
        z.order = one_plus_t_int();
        z.degree = 2 * i;
        z.label = "boundary(" + z.mon.str() + ")/(1+t)";
        out.push_back(std::move(z));
    }
    for (int i = 0; 2 * i + 3 <= n; ++i) {
        int j = n - 2 * i - 2;
        if (j < 1) continue;
        ZClass z;
        z.mon.c = 2 * i + 1;
        z.mon.xs.assign(j - 1, 0);
        z.mon.xs.push_back(1);
        z.mon.p = 0;
        z.order = one_plus_t_int();
        z.degree = 2 * i + 1;
        z.label = "boundary(" + z.mon.str() + ")/(1+t)";
        out.push_back(std::move(z));
    }
    if (n >= 2 && n % 2 == 0) {
        ZClass z;
        z.mon.c = n;
        z.mon.p = 0;
        z.order = one_minus_t2_int();
        z.degree = n - 1;
        z.label = "boundary(" + z.mon.str() + ")/(1-t^2)";
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<std::vector<int>> x_multisets(int total, int minidx) {
    std::vector<std::vector<int>> out;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    for (int i = minidx; (1 << i) <= total; ++i)
        for (auto tail : x_multisets(total - (1 << i), i)) {
            tail.insert(tail.begin(), i);
            out.push_back(std::move(tail));
        }
    return out;
}

std::vector<ZClass> mod2_laurent_classes(int n) {
    std::vector<ZClass> out;
    for (int c = 1; c <= n; ++c) {
        int v = 0;
        while (c % (1 << (v + 1)) == 0) ++v;
        for (const auto& xs : x_multisets(n - c, v)) {
            ZClass z;
            z.mon.c = c;
            z.mon.xs = xs;
            z.mon.p = 2;
            z.order = (v == 0) ? one_plus_t_int() : tpoly_pow(one_minus_t2_int(), 1 << (v - 1));
            z.degree = z.mon.degree() - 1;
            z.label = "boundary(" + z.mon.str() + ")/" +
                      (v == 0 ? std::string("(1+t)")
                              : "(1-t^2)^" + std::to_string(1 << (v - 1)));
            out.push_back(std::move(z));
        }
    }
    return out;
}

}  // namespace artin
