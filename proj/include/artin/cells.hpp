#pragma once

// Cells of the Artin complexes are bit strings of length n; in the type-B
// family the first slot is marked and plays a special role. A cell is stored
// as an unsigned `code` with slot i (counted from the left / the mark) at bit
// position n-1-i, so ascending numeric order is lexicographic string order.

#include "artin/qpoly.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace artin {

using Cell = uint32_t;

inline int cell_degree(Cell c) { return std::popcount(c); }

inline int cell_slot(Cell c, int n, int i) { return (c >> (n - 1 - i)) & 1u; }

inline Cell cell_ones(int k) { return (Cell(1) << k) - 1; }

/// number of leading 1-slots
inline int cell_leading_ones(Cell c, int n) {
    int a = 0;
    while (a < n && cell_slot(c, n, a) == 1) ++a;
    return a;
}

/// 1^h 0 1^k as a string of length h+k+1
inline Cell cell_run(int h, int k) { return (cell_ones(h) << (k + 1)) | cell_ones(k); }

inline std::string cell_str(Cell c, int n, bool marked) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        s += cell_slot(c, n, i) ? '1' : '0';
        if (marked && i == 0) s += '\'';
    }
    if (n == 0) s = "()";
    return s;
}

/// parse "0110" / "1'011" back into a cell code
Cell cell_parse(const std::string& s, int* n_out, bool* marked_out);

/// all length-n cells of the given degree, in lexicographic order
std::vector<Cell> cells_of_degree(int n, int d);

/// Boundary of a type-A cell; coefficients are integers
/// (Gaussian binomials specialized at q = -1, with Leibniz signs).
std::vector<std::pair<Cell, Int>> boundary_A(Cell c, int n);

/// Boundary of a type-B cell; coefficients are polynomials in t
/// (primed binomials at q = -1). The module twist by (-t) on the first
/// standard generator lives entirely in the t variable.
std::vector<std::pair<Cell, TPoly>> boundary_B(Cell c, int n);

} // namespace artin
