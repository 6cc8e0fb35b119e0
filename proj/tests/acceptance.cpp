// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run with no arguments for all criteria, or list criterion
// numbers to run a subset.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "tcup/cech_oracle.hpp"
#include "tcup/cup_product.hpp"
#include "tcup/cycle_certificate.hpp"
#include "tcup/degree_scan.hpp"
#include "tcup/fan_fuzz.hpp"
#include "tcup/fan_json.hpp"
#include "tcup/graded_tangent.hpp"
#include "tcup/standard_fans.hpp"

using namespace tcup;

namespace {

const Deg U = {Int(-1), Int(0), Int(0)};
const Deg UP = {Int(0), Int(-1), Int(0)};
const Deg W = {Int(-1), Int(-1), Int(0)};

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

// ---------------------------------------------------------------- criterion 1
Outcome first_order_table()
{
    Outcome out;
    Fan fan = obstructed_threefold();
    GradedTable table = compute_table(fan);

    const GradedEntry* a = table.find(0, U);
    out.require(a && a->h1 == 1, "dim at (ray 0, (-1,0,0)) != 1");
    if (a) {
        out.require(a->components == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5}},
                    "components at (ray 0, (-1,0,0)) wrong");
    }
    const GradedEntry* b = table.find(5, UP);
    out.require(b && b->h1 == 1, "dim at (ray 5, (0,-1,0)) != 1");
    if (b) {
        out.require(b->components == std::vector<std::vector<int>>{{6}, {7}},
                    "components at (ray 5, (0,-1,0)) wrong");
    }
    for (const auto& e : table.entries) {
        if (e.u == U && e.h1 > 0)
            out.require(e.ray == 0, "extra first-order class in degree (-1,0,0)");
        if (e.u == UP && e.h1 > 0)
            out.require(e.ray == 5, "extra first-order class in degree (0,-1,0)");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome obstruction_fixture()
{
    Outcome out;
    Fan fan = obstructed_threefold();
    ObstructionScan scan = obstruction_scan(fan);
    out.require(scan.obstructed, "scan found no obstruction");
    bool target_seen = false;
    for (const auto& r : scan.nonvanishing)
        if (r.rule.target_ray == 0 && r.rule.degree == W)
            target_seen = true;
    out.require(target_seen, "no non-vanishing product with target (ray 0, (-1,-1,0))");
    out.require(simplicial_h1_dim(build_support_complex(fan, 0, W)) == 1,
                "target summand dimension != 1");

    std::string cmd = std::string(TCUP_CLI_PATH) + " obstructed " + TCUP_DATA_DIR +
                      "/obstructed_threefold.json > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    out.require(WIFEXITED(status) && WEXITSTATUS(status) == 1,
                "CLI `obstructed` did not exit with code 1");
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome cycle_certificate_fixture()
{
    Outcome out;
    Fan fan = obstructed_threefold();
    SupportComplex hex = build_support_complex(fan, 0, W);
    const std::vector<int> ccw = {7, 2, 3, 1, 6, 5}; // counter-clockwise hexagon
    out.require(is_reduced_cycle(fan, ccw), "hexagon not recognized as reduced");
    auto sigma = choose_edge_cones(fan, hex, ccw);
    out.require(sigma.has_value(), "no cone choice for the hexagon");
    if (!sigma)
        return out;
    ReducedCycle alpha{ccw, *sigma};
    PairingResult r = cycle_pairing(fan, alpha, {1, 2, 3, 4}, {6}, 5, U);
    out.require(r.relevant.size() == 2,
                "expected exactly two relevant indices, got " + std::to_string(r.relevant.size()));
    out.require(abs(r.value) == 1, "pairing magnitude != 1");
    out.require(r.value == 1, "counter-clockwise value != +1");
    PairingResult rev = cycle_pairing(fan, alpha.reversed(), {1, 2, 3, 4}, {6}, 5, U);
    out.require(rev.value == -1, "reversed orientation value != -1");
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome oracle_equivalence()
{
    Outcome out;
    std::vector<std::pair<std::string, Fan>> fans;
    fans.emplace_back("threefold", obstructed_threefold());
    fans.emplace_back("p3", projective_space(3));
    fans.emplace_back("p1p1p1", product_of_lines(3));
    for (int a = 0; a <= 3; ++a)
        fans.emplace_back("hirzebruch" + std::to_string(a), hirzebruch(a));
    int probes = 0;
    for (const auto& [name, fan] : fans) {
        OracleContext ctx(fan);
        for (int ray = 0; ray < fan.ray_count(); ++ray) {
            for (const Deg& u : candidate_degrees(fan, ray)) {
                SupportComplex cx = build_support_complex(fan, ray, u);
                int h1 = components(cx).reduced_h0_dim();
                int h2 = simplicial_h1_dim(cx);
                ++probes;
                if (h1 != divisor_cohomology_dim(ctx, ray, u, 1) ||
                    h2 != divisor_cohomology_dim(ctx, ray, u, 2)) {
                    out.require(false, name + ": mismatch at ray " + std::to_string(ray) +
                                           " degree " + to_string(u));
                    return out;
                }
            }
        }
    }
    out.detail = std::to_string(probes) + " probes";
    return out;
}

// ---------------------------------------------------------------- criterion 5
struct RouteStats {
    int pairs = 0;
    int nonvanishing = 0;
};

bool routes_agree(const Fan& fan, const OracleContext& ctx, const GradedTable& table,
                  Outcome& out, RouteStats& stats, const std::string& label)
{
    std::vector<const GradedEntry*> entries;
    for (const auto& e : table.entries)
        if (e.h1 > 0)
            entries.push_back(&e);
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = i + 1; j < entries.size(); ++j) {
            const auto& ea = *entries[i];
            const auto& eb = *entries[j];
            if (ea.ray == eb.ray)
                continue;
            auto basis_a = first_order_basis(fan, ea.ray, ea.u);
            auto basis_b = first_order_basis(fan, eb.ray, eb.u);
            for (const auto& fa : basis_a) {
                for (const auto& fb : basis_b) {
                    FirstOrderSpan a = FirstOrderSpan::of(fa), b = FirstOrderSpan::of(fb);
                    ++stats.pairs;
                    CupClassReport rep = cup_cocycle(fan, a, b);
                    bool kappa = divisor_route_vanishes(ctx, a, b).vanishes;

                    bool no_certificate = true;
                    if (rep.rule.selection == CupSelection::TargetFirst ||
                        rep.rule.selection == CupSelection::TargetSecond) {
                        bool first_is_a = rep.rule.selection == CupSelection::TargetFirst;
                        const auto& zf = first_is_a ? fa : fb;
                        const auto& zs = first_is_a ? fb : fa;
                        for (const auto& alpha : find_reduced_cycles(fan, rep.target_complex)) {
                            if (cycle_pairing(fan, alpha, zf.component_vertices,
                                              zs.component_vertices, zs.ray, zf.u)
                                    .value != 0)
                                no_certificate = false;
                        }
                    }
                    if (!rep.vanishes)
                        ++stats.nonvanishing;
                    if (rep.vanishes != kappa || rep.vanishes != no_certificate) {
                        out.require(false, label + ": route disagreement at rays " +
                                               std::to_string(ea.ray) + "," +
                                               std::to_string(eb.ray));
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Outcome triple_route_agreement()
{
    Outcome out;
    RouteStats stats;
    {
        Fan fan = obstructed_threefold();
        OracleContext ctx(fan);
        if (!routes_agree(fan, ctx, compute_table(fan), out, stats, "threefold"))
            return out;
    }
    const int kFans = 100;
    for (int i = 0; i < kFans; ++i) {
        int rank = (i % 3 == 2) ? 2 : 3;
        Fan fan = random_smooth_complete_fan(20000 + i, rank, 2, 6);
        OracleContext ctx(fan);
        if (!routes_agree(fan, ctx, compute_table(fan), out, stats,
                          "seed " + std::to_string(20000 + i)))
            return out;
    }
    out.detail = std::to_string(kFans) + " random fans, " + std::to_string(stats.pairs) +
                 " class pairs, " + std::to_string(stats.nonvanishing) + " non-vanishing";
    out.require(stats.pairs > 0, "no class pairs exercised");
    out.require(stats.nonvanishing > 0, "no non-vanishing instance exercised");
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome rigidity()
{
    Outcome out;
    out.require(compute_table(projective_space(2)).h1_total == 0, "P2 not rigid");
    out.require(compute_table(projective_space(3)).h1_total == 0, "P3 not rigid");
    out.require(compute_table(product_of_lines(3)).h1_total == 0, "(P1)^3 not rigid");
    out.require(!obstruction_scan(projective_space(3)).obstructed, "P3 scan nonempty");
    out.require(!obstruction_scan(product_of_lines(3)).obstructed, "(P1)^3 scan nonempty");
    out.require(compute_table(hirzebruch(2)).h1_total == 1, "F2 total != 1");
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome algebraic_identities()
{
    Outcome out;
    Fan fan = obstructed_threefold();
    std::mt19937_64 rng(2024);
    auto rand_deg = [&]() {
        Deg u(3);
        for (int i = 0; i < 3; ++i)
            u[i] = Int((long)(rng() % 9) - 4);
        return u;
    };

    // bracket identity on characters, 1000 random instances
    for (int trial = 0; trial < 1000; ++trial) {
        Derivation a = Derivation::symbol((int)(rng() % fan.ray_count()), rand_deg());
        Derivation b = Derivation::symbol((int)(rng() % fan.ray_count()), rand_deg());
        Deg v = rand_deg();
        CharCombo lhs = bracket(fan, a, b).apply(fan, v);
        CharCombo rhs = a.apply(fan, b.apply(fan, v));
        for (auto& [deg, coeff] : b.apply(fan, a.apply(fan, v))) {
            auto it = rhs.find(deg);
            if (it == rhs.end())
                rhs.emplace(deg, -coeff);
            else {
                it->second -= coeff;
                if (it->second == 0)
                    rhs.erase(it);
            }
        }
        if (!(lhs == rhs)) {
            out.require(false, "bracket identity failed at trial " + std::to_string(trial));
            return out;
        }
    }

    // averaging map: section of the inclusion and chain map, p <= 2
    const int m = 5;
    for (int p = 0; p <= 2; ++p) {
        for (int trial = 0; trial < 10; ++trial) {
            SingularCochain f;
            f.p = p;
            std::vector<int> t(p + 1, 0);
            while (true) {
                long v = (long)(rng() % 7) - 3;
                if (v != 0)
                    f.entries[t] = Rat(v);
                int j = p;
                while (j >= 0) {
                    if (t[j] + 1 < m) {
                        ++t[j];
                        break;
                    }
                    t[j] = 0;
                    --j;
                }
                if (j < 0)
                    break;
            }
            if (p <= 1) {
                CechCocycle lhs = antisymmetrize(singular_differential(f, m), m);
                CechCocycle rhs = alternating_differential(antisymmetrize(f, m), m);
                if (lhs.entries != rhs.entries) {
                    out.require(false, "chain-map identity failed at p=" + std::to_string(p));
                    return out;
                }
            }
            CechCocycle alt = antisymmetrize(f, m);
            CechCocycle back = antisymmetrize(include_alternating(alt, m), m);
            if (back.entries != alt.entries) {
                out.require(false, "section identity failed at p=" + std::to_string(p));
                return out;
            }
        }
    }

    // d after d is zero on constructed complexes
    for (const Deg& u : {U, UP, W}) {
        ScalarCechComplex cc = closed_cover_complex(build_support_complex(fan, 0, u));
        IntMat d0 = cc.d0_matrix(), d1 = cc.d1_matrix();
        for (size_t i = 0; i < cc.triples.size(); ++i)
            for (size_t j = 0; j < cc.pieces.size(); ++j) {
                Int acc = 0;
                for (size_t k = 0; k < cc.pairs.size(); ++k)
                    acc += d1[i][k] * d0[k][j];
                out.require(acc == 0, "cover complex differential does not square to zero");
            }
    }
    OracleContext ctx(fan);
    for (const Deg& u : {U, W}) {
        DivisorCechComplex cx = build_divisor_complex(ctx, 0, u);
        for (int p = 0; p <= 1; ++p) {
            auto dp = divisor_differential(ctx, cx, p);
            auto dq = divisor_differential(ctx, cx, p + 1);
            for (size_t r = 0; r < dq.size(); ++r) {
                std::vector<Rat> acc(cx.dim(p), Rat(0));
                for (const auto& [col, val] : dq[r].entries)
                    for (const auto& [c2, v2] : dp[col].entries)
                        acc[c2] += val * v2;
                for (const Rat& v : acc)
                    out.require(v == 0, "divisor complex differential does not square to zero");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome rule_zero_vanishing()
{
    Outcome out;
    int instances = 0;
    // the fixture provides two rule-zero pairs
    {
        Fan fan = obstructed_threefold();
        OracleContext ctx(fan);
        auto fa = first_order_basis(fan, 0, U);
        auto f8 = first_order_basis(fan, 8, {Int(1), Int(-1), Int(0)});
        for (const auto& a : fa)
            for (const auto& b : f8) {
                FirstOrderSpan sa = FirstOrderSpan::of(a), sb = FirstOrderSpan::of(b);
                if (cup_degree_rule(fan, sa.ray, sa.u, sb.ray, sb.u).selection !=
                    CupSelection::Zero)
                    continue;
                ++instances;
                out.require(divisor_route_vanishes(ctx, sa, sb).vanishes,
                            "fixture rule-zero class did not vanish");
            }
    }
    for (int i = 0; i < 400 && instances < 40; ++i) {
        Fan fan = random_smooth_complete_fan(30000 + i, (i % 3 == 2) ? 2 : 3, 2, 6);
        GradedTable table = compute_table(fan);
        std::vector<const GradedEntry*> entries;
        for (const auto& e : table.entries)
            if (e.h1 > 0)
                entries.push_back(&e);
        OracleContext ctx(fan);
        for (size_t x = 0; x < entries.size(); ++x) {
            for (size_t y = x + 1; y < entries.size(); ++y) {
                const auto& ea = *entries[x];
                const auto& eb = *entries[y];
                if (ea.ray == eb.ray)
                    continue;
                if (cup_degree_rule(fan, ea.ray, ea.u, eb.ray, eb.u).selection !=
                    CupSelection::Zero)
                    continue;
                auto basis_a = first_order_basis(fan, ea.ray, ea.u);
                auto basis_b = first_order_basis(fan, eb.ray, eb.u);
                for (const auto& a : basis_a) {
                    for (const auto& b : basis_b) {
                        ++instances;
                        if (!divisor_route_vanishes(ctx, FirstOrderSpan::of(a),
                                                    FirstOrderSpan::of(b))
                                 .vanishes) {
                            out.require(false, "rule-zero class did not vanish (seed " +
                                                   std::to_string(30000 + i) + ")");
                            return out;
                        }
                    }
                }
            }
        }
    }
    out.detail = std::to_string(instances) + " rule-zero instances";
    out.require(instances >= 10, "too few rule-zero instances exercised");
    return out;
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds; // 0 = no stated budget
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    std::vector<Criterion> criteria = {
        {1, "first-order table of the threefold fixture", 1.0, first_order_table},
        {2, "fixture obstruction and CLI exit code", 5.0, obstruction_fixture},
        {3, "hexagon cycle certificate", 0.0, cycle_certificate_fixture},
        {4, "oracle equivalence over all candidate degrees", 120.0, oracle_equivalence},
        {5, "triple-route agreement on random fans", 600.0, triple_route_agreement},
        {6, "rigidity regressions", 0.0, rigidity},
        {7, "algebraic identities", 0.0, algebraic_identities},
        {8, "vanishing rule via the divisor route", 0.0, rule_zero_vanishing},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.number))
            continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
        bool pass = out.pass && in_budget;
        std::ostringstream line;
        line << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " (" << std::fixed;
        line.precision(2);
        line << seconds << " s) - " << c.name;
        if (!out.detail.empty())
            line << " [" << out.detail << "]";
        if (!in_budget)
            line << " [over budget of " << c.budget_seconds << " s]";
        std::cout << line.str() << std::endl;
        if (!pass)
            ++failures;
    }
    return failures;
}
