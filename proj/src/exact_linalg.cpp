#include "nf/exact_linalg.hpp"

#include <stdexcept>

namespace nf {

ExactSolveResult solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
    const size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<int> pivot_row_of_col(cols, -1);
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;  // free column
        std::swap(a[sel], a[pivot_row]);
        std::swap(b[sel], b[pivot_row]);
        Rational inv = Rational(1) / a[pivot_row][col];
        for (size_t j = col; j < cols; ++j) a[pivot_row][j] *= inv;
        b[pivot_row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] -= factor * a[pivot_row][j];
            b[r] -= factor * b[pivot_row];
        }
        pivot_row_of_col[col] = static_cast<int>(pivot_row);
        ++pivot_row;
    }

    ExactSolveResult res;
    for (size_t r = pivot_row; r < rows; ++r)
        if (b[r] != 0) return res;  // inconsistent
    res.consistent = true;

    res.particular.assign(cols, Rational(0));
    for (size_t col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] >= 0)
            res.particular[col] = b[static_cast<size_t>(pivot_row_of_col[col])];

    for (size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        res.free_cols.push_back(static_cast<int>(col));
        std::vector<Rational> v(cols, Rational(0));
        v[col] = 1;
        for (size_t pc = 0; pc < cols; ++pc)
            if (pivot_row_of_col[pc] >= 0)
                v[pc] = -a[static_cast<size_t>(pivot_row_of_col[pc])][col];
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

}  // namespace nf
