#include "salemhk/matrix.hpp"

namespace salemhk {

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.square()) throw InvalidInput("block_diagonal needs square blocks");
        n += b.rows();
    }
    RatMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b)
{
    std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw InvalidInput("solve_linear: shape mismatch");
    RatMatrix m(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
        m(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j <= cols; ++j) std::swap(m(r, j), m(piv, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m(i, cols) != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m(i, cols);
    return x;
}

} // namespace salemhk
