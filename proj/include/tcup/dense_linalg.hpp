#ifndef TCUP_DENSE_LINALG_HPP
#define TCUP_DENSE_LINALG_HPP

#include <optional>
#include <vector>

#include "tcup/numeric.hpp"

namespace tcup {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

/**
 * Rank over Q by fraction-free (Bareiss) elimination on integer entries.
 * This is the rank engine of the combinatorial route; the verification
 * oracle deliberately uses its own, separate elimination code.
 */
int bareiss_rank(IntMat m);

/** Determinant of a square integer matrix, fraction-free. */
Int bareiss_det(IntMat m);

/**
 * Any exact solution of A x = b (free variables set to 0), or nullopt when
 * the system is inconsistent.  A is dense rational, row-major.
 */
std::optional<std::vector<Rat>> rat_solve(RatMat a, std::vector<Rat> b);

/** Inverse of a square rational matrix; throws ContractViolation if singular. */
RatMat rat_inverse(RatMat a);

} // namespace tcup

#endif
