#include "weakdp/int_linalg.hpp"

#include <stdexcept>

#include "weakdp/exact_int.hpp"

namespace wdp {

IntMatrix identity_matrix(int n, int64_t scale) {
    IntMatrix m(static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = scale;
    return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size();
    const size_t k = b.size();
    if (k == 0 || a.empty() || a[0].size() != k)
        throw std::invalid_argument("matrix dimension mismatch");
    const size_t m = b[0].size();
    IntMatrix out(n, std::vector<int64_t>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            int64_t acc = 0;
            for (size_t t = 0; t < k; ++t) acc = checked_add(acc, checked_mul(a[i][t], b[t][j]));
            out[i][j] = acc;
        }
    return out;
}

std::vector<int64_t> matrix_apply(const IntMatrix& a, const std::vector<int64_t>& v) {
    std::vector<int64_t> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
        int64_t acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc = checked_add(acc, checked_mul(a[i][j], v[j]));
        out[i] = acc;
    }
    return out;
}

int64_t determinant(IntMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    int64_t sign = 1;
    int64_t prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                const int64_t num =
                    checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

std::optional<std::vector<int64_t>> solve_integral(const IntMatrix& a,
                                                   const std::vector<int64_t>& rhs) {
    const size_t n = a.size();
    if (rhs.size() != n) throw std::invalid_argument("solve dimension mismatch");
    const int64_t det = determinant(a);
    if (det == 0) return std::nullopt;
    std::vector<int64_t> x(n);
    for (size_t i = 0; i < n; ++i) {
        IntMatrix ai = a;
        for (size_t r = 0; r < n; ++r) ai[r][i] = rhs[r];
        const int64_t di = determinant(std::move(ai));
        if (di % det != 0) return std::nullopt;
        x[i] = di / det;
    }
    return x;
}

}  // namespace wdp
