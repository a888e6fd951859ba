#pragma once

#include <functional>
#include <vector>

namespace jelonek {

// Fraction-free determinant (Bareiss). Ring must supply +, -, *, an
// is_zero(a) predicate and divide(a, b) performing the exact division that
// the Bareiss recurrence guarantees. Row pivoting keeps the divisions exact
// (entries stay minors of the input up to sign).
template <typename T, typename IsZero, typename Divide>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, IsZero is_zero,
                      Divide divide,
                      const std::function<void(const T&)>& inspect = nullptr) {
    const size_t n = m.size();
    if (n == 0) return one;
    int sign = 1;
    T prev = one;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) {
                T zero = m[k][k] - m[k][k];
                return zero;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide(num, prev);
                if (inspect) inspect(m[i][j]);
            }
            m[i][k] = m[k][k] - m[k][k];
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = det - det - det;
    return det;
}

} // namespace jelonek
