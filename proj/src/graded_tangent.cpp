#include "tcup/graded_tangent.hpp"

#include <algorithm>
#include <functional>

#include "tcup/degree_scan.hpp"
#include "tcup/errors.hpp"

namespace tcup {

const GradedEntry* GradedTable::find(int ray, const Deg& u) const
{
    for (const auto& e : entries)
        if (e.ray == ray && e.u == u)
            return &e;
    return nullptr;
}

namespace {

GradedTable table_over(const Fan& fan,
                       const std::function<std::vector<Deg>(int)>& degrees_for_ray,
                       bool certified)
{
    fan.require_complete_simplicial();
    GradedTable table;
    table.certified_exhaustive = certified;
    for (int ray = 0; ray < fan.ray_count(); ++ray) {
        for (const Deg& u : degrees_for_ray(ray)) {
            SupportComplex cx = build_support_complex(fan, ray, u);
            if (cx.vertices.empty())
                continue;
            ComponentLabeling comp = components(cx);
            int h1 = comp.reduced_h0_dim();
            int h2 = simplicial_h1_dim(cx);
            if (h1 == 0 && h2 == 0)
                continue;
            GradedEntry e;
            e.ray = ray;
            e.u = u;
            e.h1 = h1;
            e.h2 = h2;
            e.components = comp.members;
            table.entries.push_back(std::move(e));
            table.h1_total += h1;
            table.h2_total += h2;
        }
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const GradedEntry& a, const GradedEntry& b) {
        if (a.ray != b.ray)
            return a.ray < b.ray;
        return a.u < b.u;
    });
    return table;
}

} // namespace

GradedTable compute_table(const Fan& fan)
{
    return table_over(
        fan, [&](int ray) { return candidate_degrees(fan, ray); }, /*certified=*/true);
}

GradedTable compute_table_box(const Fan& fan, const Int& box)
{
    return table_over(
        fan, [&](int ray) { return box_degrees(fan, ray, box); }, /*certified=*/false);
}

std::vector<FirstOrderClass> first_order_basis(const Fan& fan, int ray, const Deg& u)
{
    SupportComplex cx = build_support_complex(fan, ray, u);
    ComponentLabeling comp = components(cx);
    std::vector<FirstOrderClass> out;
    for (int z = 0; z < comp.component_count; ++z) {
        FirstOrderClass f;
        f.ray = ray;
        f.u = u;
        f.component_id = z;
        f.component_vertices = comp.members[z];
        f.value_per_cone.assign(fan.max_cones().size(), Rat(0));
        for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
            for (int v : comp.members[z])
                if (fan.max_cones()[ci].contains(v)) {
                    f.value_per_cone[ci] = 1;
                    break;
                }
        }
        out.push_back(std::move(f));
    }
    return out;
}

FirstOrderSpan FirstOrderSpan::of(const FirstOrderClass& f)
{
    FirstOrderSpan s;
    s.ray = f.ray;
    s.u = f.u;
    s.parts = {{Rat(1), f.component_id}};
    s.value_per_cone = f.value_per_cone;
    s.component_vertices = {f.component_vertices};
    return s;
}

FirstOrderSpan FirstOrderSpan::combine(const std::vector<std::pair<Rat, FirstOrderClass>>& terms)
{
    if (terms.empty())
        throw ContractViolation("FirstOrderSpan::combine: empty combination");
    FirstOrderSpan s;
    s.ray = terms[0].second.ray;
    s.u = terms[0].second.u;
    s.value_per_cone.assign(terms[0].second.value_per_cone.size(), Rat(0));
    for (const auto& [coeff, f] : terms) {
        if (f.ray != s.ray || f.u != s.u)
            throw ContractViolation("FirstOrderSpan::combine: mixed (ray, u) summands");
        s.parts.emplace_back(coeff, f.component_id);
        s.component_vertices.push_back(f.component_vertices);
        for (size_t i = 0; i < s.value_per_cone.size(); ++i)
            s.value_per_cone[i] += coeff * f.value_per_cone[i];
    }
    return s;
}

} // namespace tcup
