#include "artin/cells.hpp"

#include <stdexcept>

namespace artin {

Cell cell_parse(const std::string& s, int* n_out, bool* marked_out) {
    Cell c = 0;
    int n = 0;
    bool marked = false;
    for (size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '\'') {
            if (n != 1) throw std::invalid_argument("cell mark must follow the first slot");
            marked = true;
        } else if (ch == '0' || ch == '1') {
            c = (c << 1) | Cell(ch - '0');
            ++n;
        } else if (s == "()" && n == 0) {
            break;
        } else {
            throw std::invalid_argument("bad cell string: " + s);
        }
    }
    if (n_out) *n_out = n;
    if (marked_out) *marked_out = marked;
    return c;
}

std::vector<Cell> cells_of_degree(int n, int d) {
    std::vector<Cell> out;
    if (d < 0 || d > n) return out;
    for (Cell c = 0; c < (Cell(1) << n); ++c)
        if (cell_degree(c) == d) out.push_back(c);
    return out;
}

std::vector<std::pair<Cell, Int>> boundary_A(Cell c, int n) {
    std::vector<std::pair<Cell, Int>> out;
    if (n == 0) return out;
    int a = cell_leading_ones(c, n);
    if (a == n) {
        // one maximal block of 1s: split it at each position
        for (int h = 0; h < n; ++h) {
            Int coeff = gauss_binomial_m1(n + 1, h + 1);
            if (coeff == 0) continue;
            if (h % 2) coeff = -coeff;
            out.emplace_back(cell_run(h, n - 1 - h), coeff);
        }
        return out;
    }
    // c = 1^a 0 B: Leibniz over the leading block and the tail
    int nb = n - a - 1;
    Cell tail = c & cell_ones(nb);
    for (const auto& [u, coeff] : boundary_A(cell_ones(a), a))
        out.emplace_back((u << (nb + 1)) | tail, coeff);
    Int sign = (a % 2) ? -1 : 1;
    Cell prefix = cell_ones(a) << (nb + 1);
    for (const auto& [v, coeff] : boundary_A(tail, nb))
        out.emplace_back(prefix | v, sign * coeff);
    return out;
}

std::vector<std::pair<Cell, TPoly>> boundary_B(Cell c, int n) {
    std::vector<std::pair<Cell, TPoly>> out;
    if (n == 0) return out;
    if (cell_slot(c, n, 0) == 0) {
        // 0'A: the marked slot is inert, boundary acts on the tail
        Cell tail = c & cell_ones(n - 1);
        for (const auto& [v, coeff] : boundary_A(tail, n - 1))
            out.emplace_back(v, TPoly(coeff));
        return out;
    }
    int l = cell_leading_ones(c, n);
    int nb = n - l - (l < n ? 1 : 0);
    Cell tail = (l < n) ? (c & cell_ones(nb)) : 0;
    auto emit = [&](Cell head, TPoly coeff) {
        // head has length l; reattach "0 tail" when the cell extends past the block
        if (l < n)
            out.emplace_back((head << (nb + 1)) | tail, std::move(coeff));
        else
            out.emplace_back(head, std::move(coeff));
    };
    // boundary of the marked block 1'1^{l-1}
    emit(cell_ones(l - 1), primed_binomial_m1(l, 0)); // 0'1^{l-1}
    for (int h = 1; h < l; ++h) {
        TPoly coeff = primed_binomial_m1(l, h);
        if (coeff.is_zero()) continue;
        if (h % 2) coeff = -coeff;
        emit(cell_run(h, l - 1 - h), std::move(coeff)); // 1'1^{h-1}01^{l-h-1}
    }
    if (l < n) {
        TPoly sign(Int((l % 2) ? -1 : 1));
        Cell prefix = cell_ones(l) << (nb + 1);
        for (const auto& [v, coeff] : boundary_A(tail, nb))
            out.emplace_back(prefix | v, sign * TPoly(coeff));
    }
    return out;
}

} // namespace artin
