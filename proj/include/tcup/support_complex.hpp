#ifndef TCUP_SUPPORT_COMPLEX_HPP
#define TCUP_SUPPORT_COMPLEX_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tcup/dense_linalg.hpp"
#include "tcup/fan.hpp"

namespace tcup {

/**
 * The simplicial complex supporting the graded cohomology of O(D_rho) in
 * degree u: vertices are the rays with negative shifted pairing (the shift
 * -1 applies on the divisor ray itself), and a simplex is any vertex set
 * lying in a common cone.  Faces are stored up to dimension 2 (edges and
 * triangles); the one-skeleton decides H^1(X,T_X) contributions and the
 * two-skeleton decides H^2(X,T_X) contributions.
 *
 * `cover[s]` is the vertex set of the intersection with maximal cone s: a
 * full simplex, hence contractible or empty.
 */
struct SupportComplex {
    int ray = -1;
    Deg u;
    std::vector<int> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::vector<int>> cover;

    bool has_vertex(int ray_index) const;
};

SupportComplex build_support_complex(const Fan& fan, int ray, const Deg& u);

struct ComponentLabeling {
    std::map<int, int> component_of_vertex;
    int component_count = 0;
    std::vector<std::vector<int>> members; // per component, sorted; components
                                           // ordered by least vertex
    int reduced_h0_dim() const { return component_count > 0 ? component_count - 1 : 0; }
};

/** Connected components of the one-skeleton (union-find over edges). */
ComponentLabeling components(const SupportComplex& complex);

/** dim H^1 of the two-skeleton over Q (simplicial cochain ranks, Bareiss). */
int simplicial_h1_dim(const SupportComplex& complex);

/**
 * A rational alternating Cech cochain on tuples of maximal-cone indices.
 * Entries are keyed by the sorted tuple; lookups with permuted indices
 * resolve the sign, and tuples with repeated indices are zero.
 */
struct CechCocycle {
    int p = 0;
    std::map<std::vector<int>, Rat> entries;

    Rat at(std::vector<int> tuple) const;
    void set(std::vector<int> tuple, Rat value);
};

/**
 * Alternating Cech complex of the constant sheaf for the closed cover of
 * the support complex by maximal cones.  Only tuples meeting the complex
 * appear; all their intersections are simplices, so this computes the same
 * cohomology as the simplicial route (which the tests assert).
 */
struct ScalarCechComplex {
    std::vector<int> pieces;                 // cone indices with nonempty cover piece
    std::vector<std::array<int, 2>> pairs;   // sorted, nonempty pairwise meets
    std::vector<std::array<int, 3>> triples; // sorted, nonempty triple meets
    std::map<int, int> piece_index;
    std::map<std::array<int, 2>, int> pair_index;

    int h0_dim() const;
    int h1_dim() const;

    IntMat d0_matrix() const; // |pairs| x |pieces|
    IntMat d1_matrix() const; // |triples| x |pairs|
};

ScalarCechComplex closed_cover_complex(const SupportComplex& complex);

/**
 * Decide whether a one-cocycle on the cover is a coboundary; returns the
 * witness zero-cochain (indexed like `pieces`) when it is.  Throws
 * ContractViolation when the input is not closed.
 */
std::pair<bool, std::optional<std::vector<Rat>>> is_coboundary(const ScalarCechComplex& cech,
                                                               const CechCocycle& cocycle);

} // namespace tcup

#endif
