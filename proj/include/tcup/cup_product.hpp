#ifndef TCUP_CUP_PRODUCT_HPP
#define TCUP_CUP_PRODUCT_HPP

#include <optional>
#include <vector>

#include "tcup/graded_tangent.hpp"
#include "tcup/support_complex.hpp"

namespace tcup {

/**
 * Degree selection for the cup product of first-order classes at (rho, u)
 * and (rho', u') with rho(u) = rho'(u') = -1.  The product can only land in
 * the (rho, u+u') summand when rho(u') = 0, or in the (rho', u+u') summand
 * when rho'(u) = 0; it vanishes outright when rho = rho', when neither
 * pairing is zero, or (as a class) when both are.
 */
enum class CupSelection { Zero, TargetFirst, TargetSecond, BothZero };

struct CupRule {
    CupSelection selection = CupSelection::Zero;
    int target_ray = -1; // set for TargetFirst / TargetSecond
    Deg degree;          // u + u'
};

CupRule cup_degree_rule(const Fan& fan, int ray_a, const Deg& u_a, int ray_b, const Deg& u_b);

/** A hand-checkable non-vanishing certificate (see cycle_certificate.hpp). */
struct CycleCertificate {
    std::vector<int> alpha_vertices; // traversal order
    std::vector<int> sigma;          // chosen maximal cone per edge
    std::vector<int> component;      // Z vertex set
    std::vector<int> component_other;
    std::vector<std::pair<int, int>> relevant; // (edge index, b_i)
    Rat value;
};

struct CupClassReport {
    // Inputs as given.
    int ray_a = -1, ray_b = -1;
    Deg u_a, u_b;
    std::vector<std::pair<Rat, int>> span_a, span_b;
    CupRule rule;

    // Populated when the rule selects a target summand: the representing
    // one-cocycle on the closed cover of the target two-skeleton, the
    // vanishing verdict, and a primitive when the class is zero.
    bool vanishes = true;
    SupportComplex target_complex;
    ScalarCechComplex target_cover;
    CechCocycle g;
    std::optional<std::vector<Rat>> primitive;
    std::optional<CycleCertificate> certificate;
};

/**
 * The cup product of two first-order classes, represented by the explicit
 * one-cocycle g_{st} = (rho'(u)/2)(f_s f'_t - f_t f'_s) on cover pairs
 * meeting the target two-skeleton (roles swapped for a TargetSecond
 * selection).  Vanishing is decided by an exact coboundary solve.
 */
CupClassReport cup_cocycle(const Fan& fan, const FirstOrderSpan& a, const FirstOrderSpan& b);

struct ObstructionScan {
    std::vector<CupClassReport> nonvanishing;
    bool obstructed = false;
    int pairs_checked = 0;
};

/**
 * All pairs of component indicator classes across the nonzero first-order
 * table entries, filtered to the non-vanishing cup products.  Certificates
 * are attached to every report.
 */
ObstructionScan obstruction_scan(const Fan& fan);
ObstructionScan obstruction_scan(const Fan& fan, const GradedTable& table);

} // namespace tcup

#endif
