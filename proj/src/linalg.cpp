#include "qsdd/linalg.hpp"

namespace qsdd {

long bareiss_rank(std::vector<std::vector<Int>> M) {
    if (M.empty()) return 0;
    size_t rows = M.size(), cols = M[0].size();
    for (auto& r : M)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    Int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                M[r][c] = (M[rank][col] * M[r][c] - M[r][col] * M[rank][c]) / prev;
            }
            M[r][col] = 0;
        }
        prev = M[rank][col];
        ++rank;
    }
    return (long)rank;
}

bool in_row_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& target) {
    long r0 = bareiss_rank(basis);
    auto extended = basis;
    extended.push_back(target);
    return bareiss_rank(std::move(extended)) == r0;
}

} // namespace qsdd
