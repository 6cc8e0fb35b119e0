#include "tcup/support_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tcup/errors.hpp"

namespace tcup {

bool SupportComplex::has_vertex(int ray_index) const
{
    return std::binary_search(vertices.begin(), vertices.end(), ray_index);
}

SupportComplex build_support_complex(const Fan& fan, int ray, const Deg& u)
{
    SupportComplex cx;
    cx.ray = ray;
    cx.u = u;
    for (int e = 0; e < fan.ray_count(); ++e) {
        Int v = fan.pairing(e, u);
        bool vertex = (e == ray) ? (v < -1) : (v < 0);
        if (vertex)
            cx.vertices.push_back(e);
    }

    std::set<std::array<int, 2>> edges;
    std::set<std::array<int, 3>> triangles;
    cx.cover.resize(fan.max_cones().size());
    for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        std::vector<int> vs;
        for (int r : fan.max_cones()[ci].rays)
            if (cx.has_vertex(r))
                vs.push_back(r);
        std::sort(vs.begin(), vs.end());
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) {
                edges.insert({vs[a], vs[b]});
                for (size_t c = b + 1; c < vs.size(); ++c)
                    triangles.insert({vs[a], vs[b], vs[c]});
            }
        cx.cover[ci] = std::move(vs);
    }
    cx.edges.assign(edges.begin(), edges.end());
    cx.triangles.assign(triangles.begin(), triangles.end());
    return cx;
}

ComponentLabeling components(const SupportComplex& complex)
{
    std::map<int, int> parent;
    for (int v : complex.vertices)
        parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : complex.edges) {
        int a = find(e[0]), b = find(e[1]);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    ComponentLabeling out;
    std::map<int, int> root_to_id;
    for (int v : complex.vertices) {
        int r = find(v);
        auto [it, fresh] = root_to_id.try_emplace(r, (int)out.members.size());
        if (fresh)
            out.members.emplace_back();
        out.component_of_vertex[v] = it->second;
        out.members[it->second].push_back(v);
    }
    out.component_count = (int)out.members.size();
    return out;
}

int simplicial_h1_dim(const SupportComplex& complex)
{
    const int V = (int)complex.vertices.size();
    const int E = (int)complex.edges.size();
    const int T = (int)complex.triangles.size();
    if (E == 0)
        return 0;
    std::map<int, int> vid;
    for (int i = 0; i < V; ++i)
        vid[complex.vertices[i]] = i;
    std::map<std::array<int, 2>, int> eid;
    for (int i = 0; i < E; ++i)
        eid[complex.edges[i]] = i;

    IntMat d0(E, std::vector<Int>(V, Int(0)));
    for (int i = 0; i < E; ++i) {
        d0[i][vid[complex.edges[i][0]]] = -1;
        d0[i][vid[complex.edges[i][1]]] = 1;
    }
    IntMat d1(T, std::vector<Int>(E, Int(0)));
    for (int i = 0; i < T; ++i) {
        const auto& t = complex.triangles[i];
        d1[i][eid[{t[1], t[2]}]] += 1;
        d1[i][eid[{t[0], t[2]}]] -= 1;
        d1[i][eid[{t[0], t[1]}]] += 1;
    }
    int rank_d1 = bareiss_rank(std::move(d1));
    int rank_d0 = bareiss_rank(std::move(d0));
    return E - rank_d1 - rank_d0;
}

Rat CechCocycle::at(std::vector<int> tuple) const
{
    if ((int)tuple.size() != p + 1)
        throw ContractViolation("CechCocycle::at: tuple arity mismatch");
    int sign = 1;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        for (size_t j = 0; j + 1 < tuple.size() - i; ++j)
            if (tuple[j] > tuple[j + 1]) {
                std::swap(tuple[j], tuple[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1])
            return Rat(0);
    auto it = entries.find(tuple);
    if (it == entries.end())
        return Rat(0);
    return sign * it->second;
}

void CechCocycle::set(std::vector<int> tuple, Rat value)
{
    if ((int)tuple.size() != p + 1)
        throw ContractViolation("CechCocycle::set: tuple arity mismatch");
    int sign = 1;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        for (size_t j = 0; j + 1 < tuple.size() - i; ++j)
            if (tuple[j] > tuple[j + 1]) {
                std::swap(tuple[j], tuple[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1])
            throw ContractViolation("CechCocycle::set: repeated index");
    if (value == 0)
        entries.erase(tuple);
    else
        entries[tuple] = sign * value;
}

ScalarCechComplex closed_cover_complex(const SupportComplex& complex)
{
    ScalarCechComplex out;
    const int m = (int)complex.cover.size();
    for (int s = 0; s < m; ++s)
        if (!complex.cover[s].empty()) {
            out.piece_index[s] = (int)out.pieces.size();
            out.pieces.push_back(s);
        }
    auto meet = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    for (size_t i = 0; i < out.pieces.size(); ++i) {
        for (size_t j = i + 1; j < out.pieces.size(); ++j) {
            int s = out.pieces[i], t = out.pieces[j];
            std::vector<int> st = meet(complex.cover[s], complex.cover[t]);
            if (st.empty())
                continue;
            out.pair_index[{s, t}] = (int)out.pairs.size();
            out.pairs.push_back({s, t});
            for (size_t k = j + 1; k < out.pieces.size(); ++k) {
                int g = out.pieces[k];
                if (!meet(st, complex.cover[g]).empty())
                    out.triples.push_back({s, t, g});
            }
        }
    }
    std::sort(out.triples.begin(), out.triples.end());
    return out;
}

IntMat ScalarCechComplex::d0_matrix() const
{
    IntMat d0(pairs.size(), std::vector<Int>(pieces.size(), Int(0)));
    for (size_t i = 0; i < pairs.size(); ++i) {
        d0[i][piece_index.at(pairs[i][0])] = -1;
        d0[i][piece_index.at(pairs[i][1])] = 1;
    }
    return d0;
}

IntMat ScalarCechComplex::d1_matrix() const
{
    IntMat d1(triples.size(), std::vector<Int>(pairs.size(), Int(0)));
    for (size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        d1[i][pair_index.at({t[1], t[2]})] += 1;
        d1[i][pair_index.at({t[0], t[2]})] -= 1;
        d1[i][pair_index.at({t[0], t[1]})] += 1;
    }
    return d1;
}

int ScalarCechComplex::h0_dim() const
{
    return (int)pieces.size() - bareiss_rank(d0_matrix());
}

int ScalarCechComplex::h1_dim() const
{
    int rank_d0 = bareiss_rank(d0_matrix());
    int rank_d1 = bareiss_rank(d1_matrix());
    return (int)pairs.size() - rank_d1 - rank_d0;
}

std::pair<bool, std::optional<std::vector<Rat>>> is_coboundary(const ScalarCechComplex& cech,
                                                               const CechCocycle& cocycle)
{
    if (cocycle.p != 1)
        throw ContractViolation("is_coboundary: expected a one-cochain");
    for (const auto& t : cech.triples) {
        Rat d = cocycle.at({t[1], t[2]}) - cocycle.at({t[0], t[2]}) + cocycle.at({t[0], t[1]});
        if (d != 0)
            throw ContractViolation("is_coboundary: input is not a cocycle");
    }
    RatMat a(cech.pairs.size(), std::vector<Rat>(cech.pieces.size(), Rat(0)));
    std::vector<Rat> b(cech.pairs.size());
    for (size_t i = 0; i < cech.pairs.size(); ++i) {
        a[i][cech.piece_index.at(cech.pairs[i][0])] = -1;
        a[i][cech.piece_index.at(cech.pairs[i][1])] = 1;
        b[i] = cocycle.at({cech.pairs[i][0], cech.pairs[i][1]});
    }
    auto x = rat_solve(std::move(a), std::move(b));
    if (!x)
        return {false, std::nullopt};
    return {true, std::move(x)};
}

} // namespace tcup
