#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wdp {

// Dense row-major integer matrix. Everything here is exact; sizes stay below
// rank 13 so int64 never comes close to overflowing (guarded anyway).
using IntMatrix = std::vector<std::vector<int64_t>>;

IntMatrix identity_matrix(int n, int64_t scale = 1);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
std::vector<int64_t> matrix_apply(const IntMatrix& a, const std::vector<int64_t>& v);

// Fraction-free (Bareiss) determinant.
int64_t determinant(IntMatrix m);

// Solve a x = rhs for square nonsingular a; returns the solution only if it
// is integral, std::nullopt if it is fractional or a is singular.
std::optional<std::vector<int64_t>> solve_integral(const IntMatrix& a,
                                                   const std::vector<int64_t>& rhs);

}  // namespace wdp
