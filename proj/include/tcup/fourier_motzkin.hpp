#ifndef TCUP_FOURIER_MOTZKIN_HPP
#define TCUP_FOURIER_MOTZKIN_HPP

#include <optional>
#include <vector>

#include "tcup/numeric.hpp"

namespace tcup {

enum class Rel { Eq, Le, Lt };

/**
 * One linear condition  coeffs·x  rel  rhs.  Normalize >= / > by negating
 * before constructing.
 */
struct LinearConstraint {
    std::vector<Rat> coeffs;
    Rat rhs;
    Rel rel = Rel::Le;

    static LinearConstraint eq(std::vector<Rat> c, Rat r) { return {std::move(c), std::move(r), Rel::Eq}; }
    static LinearConstraint le(std::vector<Rat> c, Rat r) { return {std::move(c), std::move(r), Rel::Le}; }
    static LinearConstraint lt(std::vector<Rat> c, Rat r) { return {std::move(c), std::move(r), Rel::Lt}; }
    static LinearConstraint ge(std::vector<Rat> c, Rat r);
    static LinearConstraint gt(std::vector<Rat> c, Rat r);
};

/**
 * Exact Fourier-Motzkin feasibility over the rationals.  Equalities are
 * eliminated by substitution first, then variables are projected out one by
 * one; a mixed strict/weak combination stays strict.  Returns a witness
 * point when the system is feasible.
 */
std::optional<std::vector<Rat>> fm_feasible_point(const std::vector<LinearConstraint>& constraints,
                                                  int num_vars);

/** Feasibility without the witness (same elimination). */
bool fm_feasible(const std::vector<LinearConstraint>& constraints, int num_vars);

} // namespace tcup

#endif
