#include "sizefn/exact_rank.hpp"

#include <stdexcept>
#include <utility>

namespace sizefn {

std::size_t integer_matrix_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    std::size_t rank = 0;
    __int128 prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[rank], a[pivot_row]);
        const __int128 pivot = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[rank][j]) / prev_pivot;
            a[i][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace sizefn
