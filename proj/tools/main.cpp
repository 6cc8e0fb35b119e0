// Command-line driver: validation, graded deformation tables, cup products,
// obstruction scans, cycle certificates, and the oracle agreement suite.
//
// Exit codes: 0 success, 2 error.  `obstructed` exits 1 when a non-vanishing
// cup product is certified, and `oracle-check` exits 1 on any disagreement,
// so both are directly usable in scripts.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcup/cech_oracle.hpp"
#include "tcup/cup_product.hpp"
#include "tcup/cycle_certificate.hpp"
#include "tcup/degree_scan.hpp"
#include "tcup/errors.hpp"
#include "tcup/fan_fuzz.hpp"
#include "tcup/fan_json.hpp"
#include "tcup/graded_tangent.hpp"

using nlohmann::ordered_json;
using namespace tcup;

namespace {

struct FanInput {
    Fan fan;
    std::string hash;
};

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

FanInput read_fan(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open fan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return FanInput{load_fan_json(text), fnv1a_hex(text)};
}

ordered_json deg_json(const Deg& u)
{
    auto a = ordered_json::array();
    for (const auto& x : u)
        a.push_back(x.convert_to<long long>());
    return a;
}

Deg parse_degree(const std::string& text, int rank)
{
    Deg u;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        u.push_back(Int(item));
    if ((int)u.size() != rank)
        throw ParseError("degree vector '" + text + "' does not have " + std::to_string(rank) +
                         " entries");
    return u;
}

ordered_json table_json(const GradedTable& table, const FanInput& input, bool h1)
{
    ordered_json j;
    j["fan_hash"] = input.hash;
    j["kind"] = h1 ? "first_order" : "obstruction_space";
    j["certified_exhaustive"] = table.certified_exhaustive;
    auto entries = ordered_json::array();
    for (const auto& e : table.entries) {
        int dim = h1 ? e.h1 : e.h2;
        if (dim == 0)
            continue;
        ordered_json row;
        row["ray"] = e.ray;
        row["u"] = deg_json(e.u);
        row["dim"] = dim;
        if (h1) {
            auto comps = ordered_json::array();
            for (const auto& c : e.components)
                comps.push_back(c);
            row["components"] = std::move(comps);
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    j["total"] = h1 ? table.h1_total : table.h2_total;
    return j;
}

void print_table_tsv(const GradedTable& table, bool h1, std::ostream& os)
{
    os << "ray\tu\tdim\n";
    int total = 0;
    for (const auto& e : table.entries) {
        int dim = h1 ? e.h1 : e.h2;
        if (dim == 0)
            continue;
        total += dim;
        os << e.ray << "\t";
        for (size_t i = 0; i < e.u.size(); ++i)
            os << (i ? "," : "") << e.u[i];
        os << "\t" << dim << "\n";
    }
    os << "# total\t" << total << "\n";
    if (!table.certified_exhaustive)
        os << "# not certified exhaustive (manual degree box)\n";
}

ordered_json certificate_json(const CycleCertificate& cert)
{
    ordered_json c;
    c["alpha"] = cert.alpha_vertices;
    c["sigma_choice"] = cert.sigma;
    c["Z"] = cert.component;
    c["Z_other"] = cert.component_other;
    auto rel = ordered_json::array();
    for (const auto& [i, b] : cert.relevant)
        rel.push_back(ordered_json{{"edge", i}, {"b", b}});
    c["relevant"] = std::move(rel);
    c["value"] = cert.value.str();
    c["orientation"] = "as-listed; reversing the vertex order negates the value";
    return c;
}

ordered_json report_json(const CupClassReport& r, const FanInput& input)
{
    ordered_json j;
    j["fan_hash"] = input.hash;
    j["ray"] = r.ray_a;
    j["u"] = deg_json(r.u_a);
    j["ray2"] = r.ray_b;
    j["u2"] = deg_json(r.u_b);
    auto span = [&](const std::vector<std::pair<Rat, int>>& parts) {
        auto a = ordered_json::array();
        for (const auto& [coeff, comp] : parts)
            a.push_back(ordered_json{{"coeff", coeff.str()}, {"component", comp}});
        return a;
    };
    j["span"] = span(r.span_a);
    j["span2"] = span(r.span_b);
    switch (r.rule.selection) {
    case CupSelection::Zero: j["selection"] = "zero"; break;
    case CupSelection::BothZero: j["selection"] = "both_zero"; break;
    case CupSelection::TargetFirst:
    case CupSelection::TargetSecond:
        j["selection"] = "target";
        j["target"] = ordered_json{{"ray", r.rule.target_ray}, {"degree", deg_json(r.rule.degree)}};
        break;
    }
    j["vanishes"] = r.vanishes;
    if (r.rule.selection == CupSelection::TargetFirst ||
        r.rule.selection == CupSelection::TargetSecond) {
        auto g = ordered_json::array();
        for (const auto& [pair, value] : r.g.entries)
            g.push_back(ordered_json{{"cones", pair}, {"value", value.str()}});
        j["cocycle"] = std::move(g);
        if (r.primitive) {
            auto p = ordered_json::array();
            for (size_t i = 0; i < r.primitive->size(); ++i)
                p.push_back(ordered_json{{"cone", r.target_cover.pieces[i]},
                                         {"value", (*r.primitive)[i].str()}});
            j["primitive"] = std::move(p);
        }
    }
    if (r.certificate)
        j["certificate"] = certificate_json(*r.certificate);
    return j;
}

int run_validate(const std::string& path)
{
    FanInput input = read_fan(path);
    ordered_json j;
    j["fan_hash"] = input.hash;
    j["rank"] = input.fan.rank();
    j["rays"] = input.fan.ray_count();
    j["max_cones"] = (int)input.fan.max_cones().size();
    j["simplicial"] = input.fan.is_simplicial();
    j["smooth"] = input.fan.is_smooth();
    j["complete"] = input.fan.is_complete();
    j["notes"] = input.fan.report().notes;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_table(const std::string& path, bool h1, const std::string& format, long long degree_box)
{
    FanInput input = read_fan(path);
    GradedTable table = degree_box >= 0 ? compute_table_box(input.fan, Int(degree_box))
                                        : compute_table(input.fan);
    if (format == "tsv")
        print_table_tsv(table, h1, std::cout);
    else
        std::cout << table_json(table, input, h1).dump(2) << "\n";
    return 0;
}

int run_cup(const std::string& path, int ray, const std::string& deg, int ray2,
            const std::string& deg2, int comp, int comp2)
{
    FanInput input = read_fan(path);
    const Fan& fan = input.fan;
    Deg u = parse_degree(deg, fan.rank());
    Deg u2 = parse_degree(deg2, fan.rank());
    auto basis_a = first_order_basis(fan, ray, u);
    auto basis_b = first_order_basis(fan, ray2, u2);
    if (basis_a.empty() || basis_b.empty()) {
        std::cerr << "warning: a factor has no components at its degree; nothing to cup\n";
        return 0;
    }
    auto reports = ordered_json::array();
    for (const auto& fa : basis_a) {
        if (comp >= 0 && fa.component_id != comp)
            continue;
        for (const auto& fb : basis_b) {
            if (comp2 >= 0 && fb.component_id != comp2)
                continue;
            CupClassReport r = cup_cocycle(fan, FirstOrderSpan::of(fa), FirstOrderSpan::of(fb));
            if (!r.vanishes)
                r.certificate = find_certificate(fan, r);
            reports.push_back(report_json(r, input));
        }
    }
    std::cout << (reports.size() == 1 ? reports[0] : ordered_json(std::move(reports))).dump(2)
              << "\n";
    return 0;
}

int run_obstructed(const std::string& path)
{
    FanInput input = read_fan(path);
    input.fan.require_complete_simplicial();
    ObstructionScan scan = obstruction_scan(input.fan);
    ordered_json j;
    j["fan_hash"] = input.hash;
    j["pairs_checked"] = scan.pairs_checked;
    j["obstructed"] = scan.obstructed;
    auto reports = ordered_json::array();
    for (const auto& r : scan.nonvanishing)
        reports.push_back(report_json(r, input));
    j["nonvanishing"] = std::move(reports);
    std::cout << j.dump(2) << "\n";
    return scan.obstructed ? 1 : 0;
}

int run_certificate(const std::string& path)
{
    FanInput input = read_fan(path);
    input.fan.require_complete_simplicial();
    ObstructionScan scan = obstruction_scan(input.fan);
    auto certs = ordered_json::array();
    for (const auto& r : scan.nonvanishing) {
        if (!r.certificate)
            continue;
        ordered_json c = certificate_json(*r.certificate);
        c["target_ray"] = r.rule.target_ray;
        c["degree"] = deg_json(r.rule.degree);
        certs.push_back(std::move(c));
    }
    ordered_json j;
    j["fan_hash"] = input.hash;
    j["certificates"] = std::move(certs);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int check_fan_agreement(const Fan& fan, std::ostream& os, int& failures)
{
    OracleContext ctx(fan);
    int probes = 0;
    for (int ray = 0; ray < fan.ray_count(); ++ray) {
        for (const Deg& u : candidate_degrees(fan, ray)) {
            SupportComplex cx = build_support_complex(fan, ray, u);
            int h1 = components(cx).reduced_h0_dim();
            int h2 = simplicial_h1_dim(cx);
            int o1 = divisor_cohomology_dim(ctx, ray, u, 1);
            int o2 = divisor_cohomology_dim(ctx, ray, u, 2);
            bool ok = h1 == o1 && h2 == o2;
            ++probes;
            if (!ok)
                ++failures;
            if (!ok || h1 > 0 || h2 > 0)
                os << "ray " << ray << "  u " << to_string(u) << "  combinatorial " << h1 << "/"
                   << h2 << "  oracle " << o1 << "/" << o2 << "  " << (ok ? "ok" : "MISMATCH")
                   << "\n";
        }
    }
    os << "checked " << probes << " (ray, degree) pairs\n";
    return probes;
}

int run_oracle_check(const std::string& path, int random_fans, unsigned long long seed)
{
    int failures = 0;
    if (!path.empty()) {
        FanInput input = read_fan(path);
        input.fan.require_complete_simplicial();
        std::cout << "fan " << path << " (hash " << input.hash << ")\n";
        check_fan_agreement(input.fan, std::cout, failures);
    }
    for (int i = 0; i < random_fans; ++i) {
        Fan fan = random_smooth_complete_fan(seed + i, i % 2 == 0 ? 3 : 2);
        std::cout << "random fan seed " << (seed + i) << " rank " << fan.rank() << " ("
                  << fan.ray_count() << " rays, " << fan.max_cones().size() << " cones)\n";
        check_fan_agreement(fan, std::cout, failures);
    }
    std::cout << (failures == 0 ? "all agree\n" : "DISAGREEMENT FOUND\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded deformation spaces and cup products of complete simplicial toric fans"};
    app.require_subcommand(1);

    std::string fan_path, deg, deg2, format = "json";
    int ray = -1, ray2 = -1, comp = -1, comp2 = -1, random_fans = 0;
    long long degree_box = -1;
    unsigned long long seed = 1;

    auto* validate = app.add_subcommand("validate", "validate a fan file and print its flags");
    validate->add_option("fan", fan_path)->required();

    auto* t1 = app.add_subcommand("t1", "multigraded table of first-order deformations");
    t1->add_option("fan", fan_path)->required();
    t1->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    t1->add_option("--degree-box", degree_box, "scan |u_i| <= B instead of the certified set");

    auto* t2 = app.add_subcommand("t2", "multigraded table of the obstruction space");
    t2->add_option("fan", fan_path)->required();
    t2->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    t2->add_option("--degree-box", degree_box);

    auto* cup = app.add_subcommand("cup", "cup product of two first-order classes");
    cup->add_option("fan", fan_path)->required();
    cup->add_option("--ray", ray)->required();
    cup->add_option("--deg", deg, "comma-separated degree, e.g. --deg=-1,0,0")->required();
    cup->add_option("--ray2", ray2)->required();
    cup->add_option("--deg2", deg2)->required();
    cup->add_option("--comp", comp, "component id of the first class");
    cup->add_option("--comp2", comp2, "component id of the second class");

    auto* obstructed = app.add_subcommand("obstructed", "scan for non-vanishing cup products");
    obstructed->add_option("fan", fan_path)->required();

    auto* certificate = app.add_subcommand("certificate", "cycle certificates of obstructedness");
    certificate->add_option("fan", fan_path)->required();

    auto* oracle = app.add_subcommand("oracle-check", "combinatorial vs brute-force agreement");
    oracle->add_option("fan", fan_path);
    oracle->add_option("--random-fans", random_fans, "also check N seeded random fans");
    oracle->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate))
            return run_validate(fan_path);
        if (app.got_subcommand(t1))
            return run_table(fan_path, true, format, degree_box);
        if (app.got_subcommand(t2))
            return run_table(fan_path, false, format, degree_box);
        if (app.got_subcommand(cup))
            return run_cup(fan_path, ray, deg, ray2, deg2, comp, comp2);
        if (app.got_subcommand(obstructed))
            return run_obstructed(fan_path);
        if (app.got_subcommand(certificate))
            return run_certificate(fan_path);
        if (app.got_subcommand(oracle))
            return run_oracle_check(fan_path, random_fans, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
