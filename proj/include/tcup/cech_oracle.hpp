#ifndef TCUP_CECH_ORACLE_HPP
#define TCUP_CECH_ORACLE_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tcup/derivation.hpp"
#include "tcup/fan.hpp"
#include "tcup/graded_tangent.hpp"
#include "tcup/support_complex.hpp"

// Brute-force verification layer.  Everything here recomputes cohomology
// from the open affine cover by maximal cones, with its own tuple
// enumeration and its own elimination engine, deliberately sharing no code
// with the combinatorial route it cross-checks.

namespace tcup {

struct SparseRow {
    std::vector<std::pair<int, Rat>> entries; // sorted by column
};

/** Oracle-private exact elimination over Q (sparse rows). */
class SparseEliminator {
public:
    static int rank(std::vector<SparseRow> rows, int ncols);
    static std::optional<std::vector<Rat>> solve(std::vector<SparseRow> rows,
                                                 std::vector<Rat> rhs, int ncols);
};

/**
 * Per-fan cache of sorted tuples of maximal-cone indices (sizes 1..4) with
 * the ray set of each tuple's intersection cone.
 */
class OracleContext {
public:
    explicit OracleContext(const Fan& fan);

    const Fan& fan() const { return *fan_; }
    int tuple_count(int p) const { return (int)tuples_[p].size(); }
    const std::vector<int>& tuple(int p, int index) const { return tuples_[p][index]; }
    const std::vector<int>& tuple_rays(int p, int index) const { return tuple_rays_[p][index]; }
    /** Position of a sorted tuple in the size-(p+1) list; -1 if absent. */
    int tuple_index(int p, const std::vector<int>& t) const;

private:
    const Fan* fan_;
    std::array<std::vector<std::vector<int>>, 4> tuples_;
    std::array<std::vector<std::vector<int>>, 4> tuple_rays_;
};

/**
 * Degree-u slice of the Cech complex of O(D_ray) over the open cover: the
 * basis in cohomological degree p is the set of (p+1)-tuples whose
 * intersection chart admits the degree-u character.
 */
struct DivisorCechComplex {
    int ray = -1;
    Deg u;
    std::array<std::vector<int>, 4> admissible;      // tuple indices into the context
    std::array<std::map<int, int>, 4> basis_position; // tuple index -> basis column

    int dim(int p) const { return (int)admissible[p].size(); }
};

DivisorCechComplex build_divisor_complex(const OracleContext& ctx, int ray, const Deg& u);

/** Differential C^p -> C^{p+1} of the admissible complex, as sparse rows. */
std::vector<SparseRow> divisor_differential(const OracleContext& ctx,
                                            const DivisorCechComplex& cx, int p);

/** dim H^p(U, O(D_ray))_u for p in {0,1,2}, by exact rank computation. */
int divisor_cohomology_dim(const OracleContext& ctx, int ray, const Deg& u, int p);

// ---------------------------------------------------------------------------
// Singular cochains and the averaging map onto alternating cochains.

/** Rational cochain on ordered index tuples (repetitions allowed). */
struct SingularCochain {
    int p = 0;
    std::map<std::vector<int>, Rat> entries;

    Rat at(const std::vector<int>& t) const;
    void set(const std::vector<int>& t, Rat v);
};

SingularCochain singular_differential(const SingularCochain& f, int index_count);
SingularCochain include_alternating(const CechCocycle& c, int index_count);

/**
 * The averaging projection onto alternating cochains:
 *   phi(f)_{i0..ip} = 1/(p+1)! sum_pi sign(pi) f_{i_pi(0)..i_pi(p)}.
 * A section of the inclusion and a chain map; only needed (and only
 * supported) for p <= 2.
 */
CechCocycle antisymmetrize(const SingularCochain& f, int index_count);

CechCocycle alternating_differential(const CechCocycle& c, int index_count);

// ---------------------------------------------------------------------------
// The cup product upstairs: derivation-valued two-cochains and their lifts
// to divisor-sheaf cocycles.

struct DerivationCochain {
    int p = 0;
    std::map<std::vector<int>, Derivation> entries;

    Derivation at(std::vector<int> t) const;
    void set(std::vector<int> t, Derivation v);
};

/**
 * The tangent-valued two-cocycle representing the cup product of two
 * first-order classes, assembled from the closed product formula.
 */
DerivationCochain tangent_cup_direct(const Fan& fan, const FirstOrderSpan& a,
                                     const FirstOrderSpan& b);

/**
 * Same class assembled the long way: the classes are first mapped to
 * derivation-valued one-cocycles, then multiplied with the alternating cup
 * formula (the bracket-average over the six orderings).  Must agree with
 * tangent_cup_direct entrywise.
 */
DerivationCochain tangent_cup_via_bracket(const Fan& fan, const FirstOrderSpan& a,
                                          const FirstOrderSpan& b);

/**
 * Lift of the tangent cup cocycle to a pair of divisor-sheaf two-cocycles:
 * on_a lives in C^2(O(D_{ray_a}))_{u_a+u_b} with scalar
 * (ray_b(u_a)/2) * (antisymmetrized product), on_b symmetrically with
 * (ray_a(u_b)/2).  The tangent cocycle is the Euler image of
 * on_b - on_a.  Requires ray_a != ray_b.  Construction audits that every
 * nonzero entry is a regular section on its chart.
 */
struct DivisorLift {
    CechCocycle on_a;
    CechCocycle on_b;
};

DivisorLift divisor_lift(const OracleContext& ctx, const FirstOrderSpan& a,
                         const FirstOrderSpan& b);

struct DivisorRouteResult {
    bool vanishes = false;        // both lifted classes are coboundaries
    bool class_a_vanishes = false;
    bool class_b_vanishes = false;
};

/**
 * Vanishing of the cup product decided entirely on the divisor side: the
 * class vanishes iff both lifted two-cocycles are coboundaries in their
 * admissible complexes.  Independent of the combinatorial route.
 */
DivisorRouteResult divisor_route_vanishes(const OracleContext& ctx, const FirstOrderSpan& a,
                                          const FirstOrderSpan& b);

/**
 * Whether a derivation-valued two-cocycle of pure degree w is a coboundary
 * in the tangent-sheaf Cech complex, modelling local degree-w sections as
 * spans of chart-admissible ray derivations.
 */
bool tangent_two_cocycle_vanishes(const OracleContext& ctx, const DerivationCochain& theta,
                                  const Deg& w);

} // namespace tcup

#endif
