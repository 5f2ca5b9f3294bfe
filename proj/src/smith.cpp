#include "homcount/smith.hpp"

#include <cstdlib>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Smallest nonzero entry by absolute value in the submatrix from (t,t) on.
bool find_pivot(const Matrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < m.size(); ++i)
        for (std::size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            Int a = abs(m[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Int> smith_normal_form(Matrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw SizeMismatch("ragged matrix");
    std::size_t n = std::min(rows, cols);
    std::vector<Int> diag(n, 0);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(m, t, pi, pj)) break;
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);

        while (true) {
            // Clear column t with euclidean steps; a nonzero remainder becomes
            // the new, strictly smaller pivot.
            bool reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    swap_rows(m, t, i);
                    reduced = false;
                    break;
                }
            }
            if (!reduced) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    swap_cols(m, t, j);
                    reduced = false;
                    break;
                }
            }
            if (!reduced) continue;

            // Pivot now alone in its row and column. Pull in any entry it does
            // not divide so the elementary divisors come out in a chain.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols && divisible; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        divisible = false;
                    }
            if (divisible) break;
        }
        diag[t] = abs(m[t][t]);
    }

    for (std::size_t t = 0; t + 1 < n; ++t)
        if (diag[t] != 0 && diag[t + 1] != 0 && diag[t + 1] % diag[t] != 0)
            throw Error("elementary divisors not in a chain");
    return diag;
}

}  // namespace homcount
