#ifndef TCUP_DEGREE_SCAN_HPP
#define TCUP_DEGREE_SCAN_HPP

#include <optional>
#include <vector>

#include "tcup/fan.hpp"

namespace tcup {

/**
 * A face of the arrangement of ray hyperplanes {e(.) = 0} restricted to the
 * affine slice {rho(.) = -1} in M_Q.  `signs[e]` is -1/0/+1 per ray index;
 * the divisor ray itself is constantly -1 on the slice.  The support
 * complex in a degree u depends on u only through these signs, which is
 * what makes the candidate enumeration exhaustive: a degree in an unbounded
 * face repeats its complex along a lattice recession direction, forcing a
 * zero contribution.
 */
struct SignFace {
    int ray = -1;
    std::vector<int> signs;
    bool bounded = false;
    std::optional<std::vector<Rat>> witness;
};

/**
 * All nonempty faces of the slice arrangement for the given ray, by
 * recursive sign splitting with exact feasibility pruning.  Every rational
 * point of the slice lies in exactly one returned face.
 */
std::vector<SignFace> enumerate_faces(const Fan& fan, int ray);

/**
 * Whether {v : rho(v) = 0, e(v) weakly respects `signs`} = {0}, i.e. the
 * recession cone of the face closure is trivial.
 */
bool recession_trivial(const Fan& fan, int ray, const std::vector<int>& signs);

/** Sign vector of the face containing u (requires rho(u) = -1). */
std::vector<int> sign_face_of(const Fan& fan, int ray, const Deg& u);

/** Lattice points of the closure of a bounded face. */
std::vector<Deg> face_lattice_points(const Fan& fan, const SignFace& face);

/**
 * Every degree u with rho(u) = -1 that can carry a nonzero graded piece of
 * H^1 or H^2: the union of lattice points of all bounded face closures,
 * deduplicated and lexicographically sorted.
 */
std::vector<Deg> candidate_degrees(const Fan& fan, int ray);

/** Manual override: all u with |u_i| <= box and rho(u) = -1 (not certified). */
std::vector<Deg> box_degrees(const Fan& fan, int ray, const Int& box);

} // namespace tcup

#endif
