#ifndef TCUP_STANDARD_FANS_HPP
#define TCUP_STANDARD_FANS_HPP

#include "tcup/fan.hpp"

namespace tcup {

/** Fan of projective n-space: e_1..e_n, -(e_1+..+e_n), all n-subsets. */
Fan projective_space(int n);

/** Fan of (P^1)^n: rays +-e_i, one maximal cone per orthant. */
Fan product_of_lines(int n);

/** Hirzebruch surface F_a: rays (1,0),(0,1),(-1,a),(0,-1). */
Fan hirzebruch(int a);

/**
 * The smooth complete threefold fan used as the shipped obstructedness
 * fixture: 9 rays, 14 maximal cones, non-vanishing cup product
 * H^1(T_X) x H^1(T_X) -> H^2(T_X) in degree (-1,-1,0).
 */
Fan obstructed_threefold();

} // namespace tcup

#endif
