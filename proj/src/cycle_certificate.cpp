#include "tcup/cycle_certificate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "tcup/dense_linalg.hpp"
#include "tcup/errors.hpp"

namespace tcup {

std::pair<int, int> ReducedCycle::edge(int i) const
{
    int k = length();
    return {vertices[i % k], vertices[(i + 1) % k]};
}

ReducedCycle ReducedCycle::reversed() const
{
    const int k = length();
    ReducedCycle r;
    r.vertices.push_back(vertices[0]);
    for (int i = k - 1; i >= 1; --i)
        r.vertices.push_back(vertices[i]);
    r.sigma.resize(k);
    for (int i = 0; i < k; ++i)
        r.sigma[i] = sigma[(k - 1 - i + k) % k];
    return r;
}

namespace {

bool edge_in_complex(const SupportComplex& cx, int a, int b)
{
    std::array<int, 2> e = {std::min(a, b), std::max(a, b)};
    return std::binary_search(cx.edges.begin(), cx.edges.end(), e);
}

void require_cycle(const SupportComplex& cx, const std::vector<int>& verts)
{
    if (verts.size() < 3)
        throw ContractViolation("cycle must have at least three vertices");
    std::set<int> seen(verts.begin(), verts.end());
    if (seen.size() != verts.size())
        throw ContractViolation("cycle vertices are not distinct");
    for (size_t i = 0; i < verts.size(); ++i) {
        int a = verts[i], b = verts[(i + 1) % verts.size()];
        if (!edge_in_complex(cx, a, b))
            throw ContractViolation("cycle uses an edge absent from the complex");
    }
}

} // namespace

bool is_reduced_cycle(const Fan& fan, const std::vector<int>& verts)
{
    const int k = (int)verts.size();
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> rays = {verts[i], verts[(i + 1) % k], verts[j], verts[(j + 1) % k]};
            std::sort(rays.begin(), rays.end());
            rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
            if (fan.common_cone(rays))
                return false;
        }
    }
    return true;
}

bool is_null_homologous(const SupportComplex& cx, const std::vector<int>& verts)
{
    require_cycle(cx, verts);
    std::map<std::array<int, 2>, int> eid;
    for (size_t i = 0; i < cx.edges.size(); ++i)
        eid[cx.edges[i]] = (int)i;

    std::vector<Rat> chain(cx.edges.size(), Rat(0));
    for (size_t i = 0; i < verts.size(); ++i) {
        int a = verts[i], b = verts[(i + 1) % verts.size()];
        if (a < b)
            chain[eid.at({a, b})] += 1;
        else
            chain[eid.at({b, a})] -= 1;
    }
    if (cx.triangles.empty())
        return std::all_of(chain.begin(), chain.end(), [](const Rat& x) { return x == 0; });

    // boundary matrix edges x triangles
    RatMat bd(cx.edges.size(), std::vector<Rat>(cx.triangles.size(), Rat(0)));
    for (size_t t = 0; t < cx.triangles.size(); ++t) {
        const auto& tri = cx.triangles[t];
        bd[eid.at({tri[1], tri[2]})][t] += 1;
        bd[eid.at({tri[0], tri[2]})][t] -= 1;
        bd[eid.at({tri[0], tri[1]})][t] += 1;
    }
    return rat_solve(std::move(bd), std::move(chain)).has_value();
}

std::optional<std::vector<int>> choose_edge_cones(const Fan& fan, const SupportComplex& cx,
                                                  const std::vector<int>& verts)
{
    require_cycle(cx, verts);
    const int k = (int)verts.size();
    std::set<int> on_cycle(verts.begin(), verts.end());
    std::vector<int> sigma(k, -1);
    for (int i = 0; i < k; ++i) {
        int a = verts[i], b = verts[(i + 1) % k];
        for (int ci : fan.cones_containing_all({a, b})) {
            bool clean = true;
            for (int r : fan.max_cones()[ci].rays)
                if (r != a && r != b && on_cycle.count(r)) {
                    clean = false;
                    break;
                }
            if (clean) {
                sigma[i] = ci;
                break; // cones_containing_all scans in increasing index order
            }
        }
        if (sigma[i] < 0)
            return std::nullopt;
    }
    return sigma;
}

std::vector<ReducedCycle> reduce_cycle(const Fan& fan, const SupportComplex& cx,
                                       std::vector<int> start)
{
    require_cycle(cx, start);
    std::vector<ReducedCycle> out;
    std::vector<std::vector<int>> work = {std::move(start)};
    while (!work.empty()) {
        std::vector<int> c = std::move(work.back());
        work.pop_back();
        const int k = (int)c.size();
        if (k < 3)
            continue;

        int share_i = -1, share_j = -1;
        for (int i = 0; i < k && share_i < 0; ++i) {
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> rays = {c[i], c[(i + 1) % k], c[j], c[(j + 1) % k]};
                std::sort(rays.begin(), rays.end());
                rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
                if (fan.common_cone(rays)) {
                    share_i = i;
                    share_j = j;
                    break;
                }
            }
        }

        if (share_i < 0) {
            if (is_null_homologous(cx, c))
                continue;
            auto sigma = choose_edge_cones(fan, cx, c);
            if (!sigma)
                throw ContractViolation(
                    "reduce_cycle: no clean cone choice for a reduced cycle edge");
            out.push_back(ReducedCycle{std::move(c), std::move(*sigma)});
            continue;
        }

        const int i = share_i, j = share_j;
        bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
        if (adjacent) {
            // Shortcut through the shared vertex; the class is unchanged.
            int middle = (j == i + 1) ? (i + 1) : 0;
            std::vector<int> shorter;
            for (int t = 0; t < k; ++t)
                if (t != middle)
                    shorter.push_back(c[t]);
            if (shorter.size() >= 3)
                work.push_back(std::move(shorter));
            continue;
        }
        // Disjoint edges (v_i,v_{i+1}), (v_j,v_{j+1}) in one cone: split into
        // two shorter cycles closed by chords inside that cone.
        std::vector<int> first(c.begin() + (i + 1), c.begin() + (j + 1));
        std::vector<int> second;
        for (int t = (j + 1) % k; t != i + 1; t = (t + 1) % k)
            second.push_back(c[t]);
        if (first.size() >= 3)
            work.push_back(std::move(first));
        if (second.size() >= 3)
            work.push_back(std::move(second));
    }
    return out;
}

std::vector<ReducedCycle> find_reduced_cycles(const Fan& fan, const SupportComplex& cx)
{
    // Spanning forest; every chord contributes a fundamental cycle, and the
    // classes of those cycles span H_1.
    std::map<int, int> parent;
    std::set<std::array<int, 2>> tree_edges;
    std::map<int, std::vector<int>> adjacency;
    for (const auto& e : cx.edges) {
        adjacency[e[0]].push_back(e[1]);
        adjacency[e[1]].push_back(e[0]);
    }
    for (int root : cx.vertices) {
        if (parent.count(root))
            continue;
        parent[root] = root;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adjacency[v]) {
                if (parent.count(w))
                    continue;
                parent[w] = v;
                tree_edges.insert({std::min(v, w), std::max(v, w)});
                q.push(w);
            }
        }
    }

    auto path_to_root = [&](int v) {
        std::vector<int> path = {v};
        while (parent[v] != v) {
            v = parent[v];
            path.push_back(v);
        }
        return path;
    };

    std::vector<ReducedCycle> out;
    std::set<std::set<std::array<int, 2>>> seen_edge_sets;
    for (const auto& e : cx.edges) {
        if (tree_edges.count(e))
            continue;
        std::vector<int> pa = path_to_root(e[0]);
        std::vector<int> pb = path_to_root(e[1]);
        std::set<int> in_pa(pa.begin(), pa.end());
        int lca = -1;
        for (int v : pb)
            if (in_pa.count(v)) {
                lca = v;
                break;
            }
        std::vector<int> cycle;
        for (int v : pa) {
            cycle.push_back(v);
            if (v == lca)
                break;
        }
        std::vector<int> tail;
        for (int v : pb) {
            if (v == lca)
                break;
            tail.push_back(v);
        }
        std::reverse(tail.begin(), tail.end());
        cycle.insert(cycle.end(), tail.begin(), tail.end());

        for (auto& reduced : reduce_cycle(fan, cx, std::move(cycle))) {
            std::set<std::array<int, 2>> key;
            for (int i = 0; i < reduced.length(); ++i) {
                auto [a, b] = reduced.edge(i);
                key.insert({std::min(a, b), std::max(a, b)});
            }
            if (seen_edge_sets.insert(std::move(key)).second)
                out.push_back(std::move(reduced));
        }
    }
    return out;
}

PairingResult cycle_pairing(const Fan& fan, const ReducedCycle& alpha,
                            const std::vector<int>& component_first,
                            const std::vector<int>& component_second, int ray_second,
                            const Deg& u_first)
{
    const int k = alpha.length();
    if (k < 3 || (int)alpha.sigma.size() != k)
        throw ContractViolation("cycle_pairing: malformed cycle");
    if (!is_reduced_cycle(fan, alpha.vertices))
        throw ContractViolation("cycle_pairing: cycle has two edges in a common cone");

    auto meets = [&](int cone_index, const std::vector<int>& comp) {
        for (int r : fan.max_cones()[cone_index].rays)
            if (std::find(comp.begin(), comp.end(), r) != comp.end())
                return true;
        return false;
    };
    std::vector<int> x(k), y(k);
    for (int i = 0; i < k; ++i) {
        x[i] = meets(alpha.sigma[i], component_first) ? 1 : 0;
        y[i] = meets(alpha.sigma[i], component_second) ? 1 : 0;
    }

    // Orientation convention: edge i is paired against its successor so that
    // reversing the cycle negates the value; the sign is pinned by the
    // shipped threefold fixture.
    PairingResult result;
    Int total = 0;
    for (int i = 0; i < k; ++i) {
        int succ = (i + 1) % k;
        int b = x[succ] * y[i] - x[i] * y[succ];
        if (b != 0) {
            result.relevant.emplace_back(i, b);
            total += b;
        }
    }
    result.value = Rat(fan.pairing(ray_second, u_first)) / 2 * Rat(total);
    return result;
}

Rat pullback_check(const CupClassReport& report, const ReducedCycle& alpha)
{
    if (report.rule.selection != CupSelection::TargetFirst &&
        report.rule.selection != CupSelection::TargetSecond)
        throw ContractViolation("pullback_check: report has no target summand");
    Rat total = 0;
    const int k = alpha.length();
    for (int i = 0; i < k; ++i)
        total += report.g.at({alpha.sigma[(i + 1) % k], alpha.sigma[i]});
    return total;
}

std::optional<CycleCertificate> find_certificate(const Fan& fan, const CupClassReport& report)
{
    if (report.rule.selection != CupSelection::TargetFirst &&
        report.rule.selection != CupSelection::TargetSecond)
        return std::nullopt;
    if (report.span_a.size() != 1 || report.span_b.size() != 1)
        throw ContractViolation("find_certificate: report must pair single components");

    const bool first_is_a = report.rule.selection == CupSelection::TargetFirst;

    // Vertex sets of the two components, in target order.
    std::vector<int> z_first, z_second;
    {
        auto basis_a = first_order_basis(fan, report.ray_a, report.u_a);
        auto basis_b = first_order_basis(fan, report.ray_b, report.u_b);
        const auto& fa = basis_a.at(report.span_a[0].second);
        const auto& fb = basis_b.at(report.span_b[0].second);
        z_first = first_is_a ? fa.component_vertices : fb.component_vertices;
        z_second = first_is_a ? fb.component_vertices : fa.component_vertices;
    }
    int ray_second = first_is_a ? report.ray_b : report.ray_a;
    const Deg& u_first = first_is_a ? report.u_a : report.u_b;

    for (const auto& alpha : find_reduced_cycles(fan, report.target_complex)) {
        PairingResult r = cycle_pairing(fan, alpha, z_first, z_second, ray_second, u_first);
        if (r.value != 0) {
            CycleCertificate cert;
            cert.alpha_vertices = alpha.vertices;
            cert.sigma = alpha.sigma;
            cert.component = z_first;
            cert.component_other = z_second;
            cert.relevant = r.relevant;
            cert.value = r.value;
            return cert;
        }
    }
    return std::nullopt;
}

} // namespace tcup
