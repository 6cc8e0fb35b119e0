#include "tcup/cup_product.hpp"

#include <stdexcept>

#include "tcup/cycle_certificate.hpp"
#include "tcup/errors.hpp"

namespace tcup {

CupRule cup_degree_rule(const Fan& fan, int ray_a, const Deg& u_a, int ray_b, const Deg& u_b)
{
    if (fan.pairing(ray_a, u_a) != -1 || fan.pairing(ray_b, u_b) != -1)
        throw ContractViolation("cup_degree_rule: inputs must satisfy rho(u) = -1");
    CupRule rule;
    rule.degree = add_deg(u_a, u_b);
    if (ray_a == ray_b) {
        rule.selection = CupSelection::Zero;
        return rule;
    }
    bool a_clears = fan.pairing(ray_a, u_b) == 0; // product may land at (ray_a, u_a+u_b)
    bool b_clears = fan.pairing(ray_b, u_a) == 0;
    if (a_clears && b_clears) {
        rule.selection = CupSelection::BothZero;
    } else if (a_clears) {
        rule.selection = CupSelection::TargetFirst;
        rule.target_ray = ray_a;
    } else if (b_clears) {
        rule.selection = CupSelection::TargetSecond;
        rule.target_ray = ray_b;
    } else {
        rule.selection = CupSelection::Zero;
    }
    return rule;
}

CupClassReport cup_cocycle(const Fan& fan, const FirstOrderSpan& a, const FirstOrderSpan& b)
{
    fan.require_complete_simplicial();
    const size_t m = fan.max_cones().size();
    if (a.value_per_cone.size() != m || b.value_per_cone.size() != m)
        throw ContractViolation("cup_cocycle: span cone values do not match the fan");
    if (a.parts.empty() || b.parts.empty())
        throw ContractViolation("cup_cocycle: classes must be given in component span form");

    CupClassReport report;
    report.ray_a = a.ray;
    report.ray_b = b.ray;
    report.u_a = a.u;
    report.u_b = b.u;
    report.span_a = a.parts;
    report.span_b = b.parts;
    report.rule = cup_degree_rule(fan, a.ray, a.u, b.ray, b.u);

    if (report.rule.selection == CupSelection::Zero ||
        report.rule.selection == CupSelection::BothZero) {
        report.vanishes = true;
        return report;
    }

    const FirstOrderSpan& first = report.rule.selection == CupSelection::TargetFirst ? a : b;
    const FirstOrderSpan& second = report.rule.selection == CupSelection::TargetFirst ? b : a;

    report.target_complex = build_support_complex(fan, first.ray, report.rule.degree);
    report.target_cover = closed_cover_complex(report.target_complex);

    const Rat coeff = Rat(fan.pairing(second.ray, first.u)) / 2;
    report.g.p = 1;
    for (const auto& pr : report.target_cover.pairs) {
        const Rat& fs = first.value_per_cone[pr[0]];
        const Rat& ft = first.value_per_cone[pr[1]];
        const Rat& gs = second.value_per_cone[pr[0]];
        const Rat& gt = second.value_per_cone[pr[1]];
        Rat val = coeff * (fs * gt - ft * gs);
        if (val != 0)
            report.g.set({pr[0], pr[1]}, val);
    }

    for (const auto& t : report.target_cover.triples) {
        Rat d = report.g.at({t[1], t[2]}) - report.g.at({t[0], t[2]}) + report.g.at({t[0], t[1]});
        if (d != 0)
            throw std::logic_error("cup_cocycle: assembled cochain is not closed");
    }

    auto [zero, primitive] = is_coboundary(report.target_cover, report.g);
    report.vanishes = zero;
    report.primitive = std::move(primitive);
    return report;
}

ObstructionScan obstruction_scan(const Fan& fan)
{
    return obstruction_scan(fan, compute_table(fan));
}

ObstructionScan obstruction_scan(const Fan& fan, const GradedTable& table)
{
    ObstructionScan scan;
    std::vector<const GradedEntry*> h1_entries;
    for (const auto& e : table.entries)
        if (e.h1 > 0)
            h1_entries.push_back(&e);

    for (size_t i = 0; i < h1_entries.size(); ++i) {
        for (size_t j = i + 1; j < h1_entries.size(); ++j) {
            const auto& ea = *h1_entries[i];
            const auto& eb = *h1_entries[j];
            if (ea.ray == eb.ray)
                continue;
            auto basis_a = first_order_basis(fan, ea.ray, ea.u);
            auto basis_b = first_order_basis(fan, eb.ray, eb.u);
            for (const auto& fa : basis_a) {
                for (const auto& fb : basis_b) {
                    CupClassReport report =
                        cup_cocycle(fan, FirstOrderSpan::of(fa), FirstOrderSpan::of(fb));
                    ++scan.pairs_checked;
                    if (report.vanishes)
                        continue;
                    report.certificate = find_certificate(fan, report);
                    scan.nonvanishing.push_back(std::move(report));
                }
            }
        }
    }
    scan.obstructed = !scan.nonvanishing.empty();
    return scan;
}

} // namespace tcup
