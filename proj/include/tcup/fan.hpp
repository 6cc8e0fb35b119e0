#ifndef TCUP_FAN_HPP
#define TCUP_FAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "tcup/numeric.hpp"

namespace tcup {

/**
 * A cone of the fan, stored as the sorted set of indices of its extremal
 * rays.  For the simplicial fans accepted here, any subset of a maximal
 * cone's rays spans a face, so this representation covers the whole face
 * lattice.
 */
struct Cone {
    std::vector<int> rays; // sorted, distinct

    bool contains(int ray_index) const;
    bool contains_all(const std::vector<int>& ray_set) const;
};

struct ValidationReport {
    bool simplicial = false;
    bool smooth = false;
    bool complete = false;
    std::vector<std::string> notes;
};

/**
 * A complete simplicial fan: primitive ray generators in N plus maximal
 * cones as ray-index sets.  Construction validates the input and freezes
 * the structural flags; after that the object is immutable and all methods
 * are const, so concurrent reads are safe.
 *
 * Structural violations throw (InvalidFanError / UnsupportedFanError):
 * non-primitive or duplicate rays, bad indices, maximal cones that are not
 * full-dimensional, and pairs of maximal cones whose intersection is not a
 * common face.  Failing simplicial/smooth/complete checks are reported in
 * flags instead, so a caller can inspect e.g. an incomplete fan.
 */
class Fan {
public:
    Fan(int rank, std::vector<Deg> rays, std::vector<Cone> max_cones);

    int rank() const { return rank_; }
    int ray_count() const { return (int)rays_.size(); }
    const Deg& ray(int i) const { return rays_[i]; }
    const std::vector<Deg>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    const ValidationReport& report() const { return report_; }

    bool is_simplicial() const { return report_.simplicial; }
    bool is_smooth() const { return report_.smooth; }
    bool is_complete() const { return report_.complete; }

    /** Throws UnsupportedFanError unless the fan is complete and simplicial. */
    void require_complete_simplicial() const;

    /** Evaluation rho(u) of the primitive generator of a ray at u in M. */
    Int pairing(int ray_index, const Deg& u) const;

    /**
     * Whether the character of degree u is a regular section of O(D_rho) on
     * the affine chart of `cone`: every ray e of the cone must satisfy
     * e(u) >= 0, relaxed to e(u) >= -1 for e == divisor_ray.
     */
    bool section_membership(int divisor_ray, const Deg& u, const Cone& cone) const;

    /**
     * Smallest face of the fan containing every listed ray, or nullopt when
     * the rays do not lie in a common cone.  The empty set yields the zero
     * cone.
     */
    std::optional<Cone> common_cone(const std::vector<int>& ray_set) const;

    /** Indices of maximal cones containing the given ray. */
    const std::vector<int>& cones_containing(int ray_index) const;

    /** Maximal cones containing every ray in the (sorted or not) set. */
    std::vector<int> cones_containing_all(const std::vector<int>& ray_set) const;

private:
    void validate();

    int rank_;
    std::vector<Deg> rays_;
    std::vector<Cone> max_cones_;
    std::vector<std::vector<int>> ray_to_cones_;
    ValidationReport report_;
};

} // namespace tcup

#endif
