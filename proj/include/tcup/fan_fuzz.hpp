#ifndef TCUP_FAN_FUZZ_HPP
#define TCUP_FAN_FUZZ_HPP

#include <random>

#include "tcup/fan.hpp"

namespace tcup {

/**
 * Star subdivision at the face of `cone_index` spanned by the listed rays
 * (at least two): the new ray is the primitive sum of those generators, and
 * every maximal cone containing the face is fanned out around it.  Smooth
 * star subdivisions preserve smooth + complete.
 */
Fan star_subdivide(const Fan& fan, int cone_index, const std::vector<int>& face_rays);

/**
 * Seeded generator of smooth complete fans for fuzzing: starts from a
 * standard seed fan of the requested rank (2 or 3) and applies a random
 * sequence of star subdivisions.  Deterministic in `seed`.
 */
Fan random_smooth_complete_fan(std::uint64_t seed, int rank, int min_subdivisions = 1,
                               int max_subdivisions = 5);

} // namespace tcup

#endif
