#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gl4::detail {

/// Fraction-free (Bareiss) determinant over an integral domain. `div` must be
/// exact division; every intermediate quotient is exact by construction.
template <class R, class IsZero, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& one, const R& zero, IsZero is_zero, ExactDiv div) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return zero;
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div(t, prev);
            }
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    if (negate) det = zero - det;
    return det;
}

/// Sylvester matrix of two coefficient vectors given in ascending degree.
template <class R>
std::vector<std::vector<R>> sylvester(const std::vector<R>& p, const std::vector<R>& q, const R& zero) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<R>> s(size, std::vector<R>(size, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = p[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = q[n - k];
    return s;
}

}  // namespace gl4::detail
