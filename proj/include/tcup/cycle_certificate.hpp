#ifndef TCUP_CYCLE_CERTIFICATE_HPP
#define TCUP_CYCLE_CERTIFICATE_HPP

#include <optional>
#include <vector>

#include "tcup/cup_product.hpp"
#include "tcup/support_complex.hpp"

namespace tcup {

/**
 * A simple cycle in a two-skeleton, not null-homologous, with no two edges
 * in a common cone of the fan.  Edge i joins vertices[i] and vertices[i+1]
 * (cyclically); sigma[i] is a maximal cone whose intersection with the
 * cycle is exactly edge i (these exist precisely because no two edges
 * share a cone).  The vertex order carries the orientation; reversing it
 * negates every pairing value.
 */
struct ReducedCycle {
    std::vector<int> vertices;
    std::vector<int> sigma;

    int length() const { return (int)vertices.size(); }
    std::pair<int, int> edge(int i) const;
    ReducedCycle reversed() const;
};

/** Whether no two edges of the vertex cycle lie in a common cone. */
bool is_reduced_cycle(const Fan& fan, const std::vector<int>& cycle_vertices);

/** Whether the cycle's homology class in the two-skeleton is zero. */
bool is_null_homologous(const SupportComplex& complex, const std::vector<int>& cycle_vertices);

/**
 * Lexicographically least valid cone choice per edge, or nullopt when some
 * edge has none (the cycle is then not reduced, or the complex disagrees).
 */
std::optional<std::vector<int>> choose_edge_cones(const Fan& fan, const SupportComplex& complex,
                                                  const std::vector<int>& cycle_vertices);

/**
 * Rewrite a simple cycle as a homologous list of reduced cycles by
 * shortcutting / splitting pairs of edges that share a cone; cycles that
 * become null-homologous are dropped.  Terminates by strict descent in
 * edge count.
 */
std::vector<ReducedCycle> reduce_cycle(const Fan& fan, const SupportComplex& complex,
                                       std::vector<int> cycle_vertices);

/**
 * Reduced cycles spanning H_1 of the two-skeleton: fundamental cycles of a
 * spanning forest, then reduced.
 */
std::vector<ReducedCycle> find_reduced_cycles(const Fan& fan, const SupportComplex& complex);

struct PairingResult {
    Rat value;
    std::vector<std::pair<int, int>> relevant; // (edge index, b_i)
};

/**
 * The intersection pairing of two first-order components along a reduced
 * cycle in the two-skeleton at (ray_first, u_first + u_second), assuming
 * the rule selected that target (so ray_first(u_second) = 0):
 * value = (ray_second(u_first)/2) * sum of b_i over relevant edge indices.
 * Nonzero value certifies a non-vanishing cup product.
 */
PairingResult cycle_pairing(const Fan& fan, const ReducedCycle& alpha,
                            const std::vector<int>& component_first,
                            const std::vector<int>& component_second, int ray_second,
                            const Deg& u_first);

/**
 * Pullback of a cup-product report's cocycle to the cycle via the edge
 * cover: must equal cycle_pairing on indicator classes.
 */
Rat pullback_check(const CupClassReport& report, const ReducedCycle& alpha);

/**
 * Search the target two-skeleton of a non-vanishing report for a
 * certificate (cycle + components + pairing value != 0).
 */
std::optional<CycleCertificate> find_certificate(const Fan& fan, const CupClassReport& report);

} // namespace tcup

#endif
