#include "tcup/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "tcup/dense_linalg.hpp"
#include "tcup/errors.hpp"
#include "tcup/fourier_motzkin.hpp"

namespace tcup {

bool Cone::contains(int ray_index) const
{
    return std::binary_search(rays.begin(), rays.end(), ray_index);
}

bool Cone::contains_all(const std::vector<int>& ray_set) const
{
    for (int r : ray_set)
        if (!contains(r))
            return false;
    return true;
}

Fan::Fan(int rank, std::vector<Deg> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones))
{
    validate();
}

namespace {

// Rows of the inverse generator matrix: the functionals cutting out the cone.
RatMat chart_functionals(const Fan& fan, const Cone& cone)
{
    const int n = fan.rank();
    RatMat gen(n, std::vector<Rat>(n));
    for (int j = 0; j < n; ++j) {
        const Deg& g = fan.ray(cone.rays[j]);
        for (int i = 0; i < n; ++i)
            gen[i][j] = Rat(g[i]);
    }
    return rat_inverse(std::move(gen));
}

} // namespace

void Fan::validate()
{
    if (rank_ < 1)
        throw InvalidFanError("fan rank must be positive");
    if (rays_.empty())
        throw InvalidFanError("fan has no rays");
    for (size_t i = 0; i < rays_.size(); ++i) {
        if ((int)rays_[i].size() != rank_)
            throw InvalidFanError("ray " + std::to_string(i) + " has wrong dimension");
        if (content(rays_[i]) != 1)
            throw InvalidFanError("ray " + std::to_string(i) +
                                  " is not primitive (input is not normalized silently)");
    }
    {
        std::set<Deg> seen;
        for (const auto& r : rays_)
            if (!seen.insert(r).second)
                throw InvalidFanError("duplicate ray generator " + to_string(r));
    }

    if (max_cones_.empty())
        throw InvalidFanError("fan has no maximal cones");
    std::set<std::vector<int>> cone_sets;
    for (auto& c : max_cones_) {
        std::sort(c.rays.begin(), c.rays.end());
        if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
            throw InvalidFanError("maximal cone lists a ray twice");
        for (int r : c.rays)
            if (r < 0 || r >= (int)rays_.size())
                throw InvalidFanError("maximal cone references ray index " + std::to_string(r) +
                                      " out of range");
        if ((int)c.rays.size() != rank_)
            throw UnsupportedFanError("maximal cone with " + std::to_string(c.rays.size()) +
                                      " rays in rank " + std::to_string(rank_) +
                                      "; only full-dimensional simplicial cones are supported");
        if (!cone_sets.insert(c.rays).second)
            throw InvalidFanError("duplicate maximal cone");
    }

    ray_to_cones_.assign(rays_.size(), {});
    for (size_t ci = 0; ci < max_cones_.size(); ++ci)
        for (int r : max_cones_[ci].rays)
            ray_to_cones_[r].push_back((int)ci);
    for (size_t r = 0; r < rays_.size(); ++r)
        if (ray_to_cones_[r].empty())
            throw InvalidFanError("ray " + std::to_string(r) + " is not used by any maximal cone");

    // Simplicial / smooth via generator determinants.
    report_.simplicial = true;
    report_.smooth = true;
    for (const auto& c : max_cones_) {
        IntMat gen(rank_, std::vector<Int>(rank_));
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i)
                gen[i][j] = rays_[c.rays[j]][i];
        Int det = bareiss_det(std::move(gen));
        if (det == 0) {
            report_.simplicial = false;
            report_.smooth = false;
            report_.notes.push_back("degenerate maximal cone (zero determinant)");
        } else if (det != 1 && det != -1) {
            report_.smooth = false;
        }
    }
    if (!report_.simplicial) {
        report_.complete = false;
        report_.notes.push_back("completeness not evaluated for a non-simplicial fan");
        return;
    }

    // Pairwise intersections must be common faces.  For simplicial cones,
    // sigma cap tau fails to be cone(shared rays) exactly when some point of
    // the intersection has positive coordinate on a non-shared generator.
    std::vector<RatMat> functionals;
    functionals.reserve(max_cones_.size());
    for (const auto& c : max_cones_)
        functionals.push_back(chart_functionals(*this, c));

    const int n = rank_;
    for (size_t a = 0; a < max_cones_.size(); ++a) {
        for (size_t b = a + 1; b < max_cones_.size(); ++b) {
            const auto& ca = max_cones_[a];
            const auto& cb = max_cones_[b];
            std::vector<int> shared;
            std::set_intersection(ca.rays.begin(), ca.rays.end(), cb.rays.begin(), cb.rays.end(),
                                  std::back_inserter(shared));
            for (int j = 0; j < n; ++j) {
                if (std::binary_search(shared.begin(), shared.end(), ca.rays[j]))
                    continue;
                std::vector<LinearConstraint> sys;
                for (int i = 0; i < n; ++i) {
                    sys.push_back(LinearConstraint::ge(functionals[a][i], Rat(0)));
                    sys.push_back(LinearConstraint::ge(functionals[b][i], Rat(0)));
                }
                sys.push_back(LinearConstraint::ge(functionals[a][j], Rat(1)));
                if (fm_feasible(sys, n))
                    throw InvalidFanError("maximal cones " + std::to_string(a) + " and " +
                                          std::to_string(b) +
                                          " overlap without intersecting in a common face");
            }
        }
    }

    // Completeness: every facet shared by exactly two maximal cones, and the
    // facet-adjacency graph connected.  Orientation-free and exact.
    std::map<std::vector<int>, std::vector<int>> facet_cones;
    for (size_t ci = 0; ci < max_cones_.size(); ++ci) {
        const auto& c = max_cones_[ci];
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> facet;
            for (int j = 0; j < n; ++j)
                if (j != drop)
                    facet.push_back(c.rays[j]);
            facet_cones[facet].push_back((int)ci);
        }
    }
    report_.complete = true;
    for (const auto& [facet, cones] : facet_cones) {
        if (cones.size() != 2) {
            report_.complete = false;
            std::string f = "{";
            for (size_t i = 0; i < facet.size(); ++i)
                f += (i ? "," : "") + std::to_string(facet[i]);
            report_.notes.push_back("facet " + f + " belongs to " + std::to_string(cones.size()) +
                                    " maximal cone(s), expected 2");
        }
    }
    if (report_.complete && max_cones_.size() > 1) {
        std::vector<std::vector<int>> adj(max_cones_.size());
        for (const auto& [facet, cones] : facet_cones)
            if (cones.size() == 2) {
                adj[cones[0]].push_back(cones[1]);
                adj[cones[1]].push_back(cones[0]);
            }
        std::vector<bool> seen(max_cones_.size(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        size_t reached = 1;
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (int d : adj[c])
                if (!seen[d]) {
                    seen[d] = true;
                    ++reached;
                    q.push(d);
                }
        }
        if (reached != max_cones_.size()) {
            report_.complete = false;
            report_.notes.push_back("facet-adjacency graph is disconnected");
        }
    }
}

void Fan::require_complete_simplicial() const
{
    if (!report_.simplicial || !report_.complete)
        throw UnsupportedFanError("operation requires a complete simplicial fan");
}

Int Fan::pairing(int ray_index, const Deg& u) const
{
    if (ray_index < 0 || ray_index >= (int)rays_.size())
        throw ContractViolation("pairing: ray index out of range");
    if ((int)u.size() != rank_)
        throw ContractViolation("pairing: degree vector has dimension " +
                                std::to_string(u.size()) + ", fan rank is " +
                                std::to_string(rank_));
    return dot(rays_[ray_index], u);
}

bool Fan::section_membership(int divisor_ray, const Deg& u, const Cone& cone) const
{
    if (divisor_ray < 0 || divisor_ray >= (int)rays_.size())
        throw ContractViolation("section_membership: ray index out of range");
    for (int e : cone.rays) {
        Int v = pairing(e, u);
        if (e == divisor_ray ? v < -1 : v < 0)
            return false;
    }
    return true;
}

std::optional<Cone> Fan::common_cone(const std::vector<int>& ray_set) const
{
    std::vector<int> sorted = ray_set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int r : sorted)
        if (r < 0 || r >= (int)rays_.size())
            throw ContractViolation("common_cone: ray index out of range");
    if (sorted.empty())
        return Cone{};
    for (int ci : ray_to_cones_[sorted[0]])
        if (max_cones_[ci].contains_all(sorted))
            return Cone{sorted};
    return std::nullopt;
}

const std::vector<int>& Fan::cones_containing(int ray_index) const
{
    if (ray_index < 0 || ray_index >= (int)rays_.size())
        throw ContractViolation("cones_containing: ray index out of range");
    return ray_to_cones_[ray_index];
}

std::vector<int> Fan::cones_containing_all(const std::vector<int>& ray_set) const
{
    std::vector<int> out;
    if (ray_set.empty()) {
        for (size_t i = 0; i < max_cones_.size(); ++i)
            out.push_back((int)i);
        return out;
    }
    for (int ci : cones_containing(ray_set[0]))
        if (max_cones_[ci].contains_all(ray_set))
            out.push_back(ci);
    return out;
}

} // namespace tcup
