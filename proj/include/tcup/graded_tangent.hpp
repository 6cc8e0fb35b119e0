#ifndef TCUP_GRADED_TANGENT_HPP
#define TCUP_GRADED_TANGENT_HPP

#include <vector>

#include "tcup/fan.hpp"
#include "tcup/support_complex.hpp"

namespace tcup {

/**
 * One nonzero multigraded entry of the deformation tables: h1 is the
 * reduced H^0 of the one-skeleton at (ray, u) and contributes to
 * H^1(X,T_X); h2 is the H^1 of the two-skeleton and contributes to
 * H^2(X,T_X).  Component vertex sets are kept for reporting and for the
 * cup-product machinery.
 */
struct GradedEntry {
    int ray = -1;
    Deg u;
    int h1 = 0;
    int h2 = 0;
    std::vector<std::vector<int>> components;
};

struct GradedTable {
    std::vector<GradedEntry> entries; // lexicographic in (ray, u); nonzero only
    int h1_total = 0;
    int h2_total = 0;
    bool certified_exhaustive = true; // false for manual --degree-box scans

    const GradedEntry* find(int ray, const Deg& u) const;
};

/** Full table over the certified candidate degrees of every ray. */
GradedTable compute_table(const Fan& fan);

/** Table over a manual degree box; flagged not certified exhaustive. */
GradedTable compute_table_box(const Fan& fan, const Int& box);

/**
 * The indicator zero-cochain of a connected component Z of the
 * one-skeleton: value 1 on every maximal cone meeting Z, else 0.  The
 * classes of these cochains span H^0, and any component_count - 1 of them
 * descend to a basis of reduced H^0.
 */
struct FirstOrderClass {
    int ray = -1;
    Deg u;
    int component_id = -1;
    std::vector<int> component_vertices;
    std::vector<Rat> value_per_cone;
};

/** One indicator class per component of the one-skeleton at (ray, u). */
std::vector<FirstOrderClass> first_order_basis(const Fan& fan, int ray, const Deg& u);

/**
 * A rational combination of component indicator classes in one summand
 * (ray, u).  Cup products accept classes only in this span form so the
 * component provenance stays explicit.
 */
struct FirstOrderSpan {
    int ray = -1;
    Deg u;
    std::vector<std::pair<Rat, int>> parts; // (coefficient, component_id)
    std::vector<Rat> value_per_cone;
    std::vector<std::vector<int>> component_vertices; // aligned with parts

    static FirstOrderSpan of(const FirstOrderClass& f);
    static FirstOrderSpan combine(const std::vector<std::pair<Rat, FirstOrderClass>>& terms);
};

} // namespace tcup

#endif
