#pragma once

#include <vector>

#include "ecensus/arith.hpp"

namespace ecensus {

using IntMat = std::vector<std::vector<Int>>;

// Determinant by fraction-free (Bareiss) elimination, exact.
Int det(const IntMat& m);

// Basis of the integer kernel: one content-normalized vector per free
// column of the reduced row echelon form, free columns ascending, first
// nonzero entry positive. Deterministic fixed pivot order.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

}  // namespace ecensus
