#include "tcup/degree_scan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tcup/dense_linalg.hpp"
#include "tcup/errors.hpp"
#include "tcup/fourier_motzkin.hpp"

namespace tcup {

namespace {

std::vector<Rat> ray_coeffs(const Fan& fan, int e)
{
    std::vector<Rat> c(fan.rank());
    for (int i = 0; i < fan.rank(); ++i)
        c[i] = Rat(fan.ray(e)[i]);
    return c;
}

LinearConstraint slice_constraint(const Fan& fan, int ray)
{
    return LinearConstraint::eq(ray_coeffs(fan, ray), Rat(-1));
}

LinearConstraint sign_constraint(const Fan& fan, int e, int sign, bool strict)
{
    auto c = ray_coeffs(fan, e);
    if (sign < 0)
        return strict ? LinearConstraint::lt(std::move(c), Rat(0))
                      : LinearConstraint::le(std::move(c), Rat(0));
    if (sign > 0)
        return strict ? LinearConstraint::gt(std::move(c), Rat(0))
                      : LinearConstraint::ge(std::move(c), Rat(0));
    return LinearConstraint::eq(std::move(c), Rat(0));
}

Int rat_floor(const Rat& q)
{
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (f * d > n)
        --f;
    return f;
}

Int rat_ceil(const Rat& q)
{
    return -rat_floor(-q);
}

} // namespace

std::vector<SignFace> enumerate_faces(const Fan& fan, int ray)
{
    fan.require_complete_simplicial();
    const int n = fan.rank();
    std::vector<int> others;
    for (int e = 0; e < fan.ray_count(); ++e)
        if (e != ray)
            others.push_back(e);

    std::vector<SignFace> faces;
    std::vector<LinearConstraint> sys = {slice_constraint(fan, ray)};
    std::vector<int> signs(fan.ray_count(), 0);
    signs[ray] = -1;

    std::function<void(size_t)> descend = [&](size_t k) {
        auto point = fm_feasible_point(sys, n);
        if (!point)
            return;
        if (k == others.size()) {
            SignFace f;
            f.ray = ray;
            f.signs = signs;
            f.bounded = recession_trivial(fan, ray, signs);
            f.witness = std::move(point);
            faces.push_back(std::move(f));
            return;
        }
        int e = others[k];
        for (int s : {-1, 0, 1}) {
            signs[e] = s;
            sys.push_back(sign_constraint(fan, e, s, /*strict=*/s != 0));
            descend(k + 1);
            sys.pop_back();
        }
        signs[e] = 0;
    };
    descend(0);
    return faces;
}

bool recession_trivial(const Fan& fan, int ray, const std::vector<int>& signs)
{
    const int n = fan.rank();
    std::vector<LinearConstraint> sys;
    sys.push_back(LinearConstraint::eq(ray_coeffs(fan, ray), Rat(0)));
    for (int e = 0; e < fan.ray_count(); ++e) {
        if (e == ray)
            continue;
        sys.push_back(sign_constraint(fan, e, signs[e], /*strict=*/false));
    }
    for (int i = 0; i < n; ++i) {
        for (int s : {1, -1}) {
            std::vector<Rat> c(n, Rat(0));
            c[i] = 1;
            sys.push_back(LinearConstraint::eq(std::move(c), Rat(s)));
            bool nonzero_dir = fm_feasible(sys, n);
            sys.pop_back();
            if (nonzero_dir)
                return false;
        }
    }
    return true;
}

std::vector<int> sign_face_of(const Fan& fan, int ray, const Deg& u)
{
    if (fan.pairing(ray, u) != -1)
        throw ContractViolation("sign_face_of: degree is not on the slice rho(u) = -1");
    std::vector<int> signs(fan.ray_count(), 0);
    for (int e = 0; e < fan.ray_count(); ++e) {
        Int v = fan.pairing(e, u);
        signs[e] = v < 0 ? -1 : (v > 0 ? 1 : 0);
    }
    return signs;
}

std::vector<Deg> face_lattice_points(const Fan& fan, const SignFace& face)
{
    const int n = fan.rank();
    if (!face.bounded)
        throw ContractViolation("face_lattice_points: face is unbounded");

    // Closure system: equalities from the slice and the zero signs, weak
    // inequalities from the strict signs.
    IntMat eq_lhs;
    std::vector<Int> eq_rhs;
    eq_lhs.emplace_back(fan.ray(face.ray));
    eq_rhs.push_back(-1);
    std::vector<int> ineq_rays;
    for (int e = 0; e < fan.ray_count(); ++e) {
        if (e == face.ray)
            continue;
        if (face.signs[e] == 0) {
            eq_lhs.emplace_back(fan.ray(e));
            eq_rhs.push_back(0);
        } else {
            ineq_rays.push_back(e);
        }
    }
    const int eq_rank = bareiss_rank(eq_lhs);
    const int d = n - eq_rank;

    auto in_closure_rational = [&](const std::vector<Rat>& x) {
        for (int e : ineq_rays) {
            Rat v = 0;
            for (int j = 0; j < n; ++j)
                v += Rat(fan.ray(e)[j]) * x[j];
            if (face.signs[e] < 0 ? v > 0 : v < 0)
                return false;
        }
        return true;
    };

    // Vertex enumeration: each basic solution comes from the equalities plus
    // d tight inequalities of combined rank n.
    std::vector<std::vector<Rat>> vertices;
    std::vector<int> subset(d);
    std::function<void(int, int)> choose = [&](int start, int picked) {
        if (picked == d) {
            IntMat lhs = eq_lhs;
            for (int i = 0; i < d; ++i)
                lhs.emplace_back(fan.ray(subset[i]));
            if (bareiss_rank(lhs) < n)
                return;
            RatMat a;
            std::vector<Rat> b;
            for (size_t i = 0; i < eq_lhs.size(); ++i) {
                a.emplace_back(n, Rat(0));
                for (int j = 0; j < n; ++j)
                    a.back()[j] = Rat(eq_lhs[i][j]);
                b.push_back(Rat(eq_rhs[i]));
            }
            for (int i = 0; i < d; ++i) {
                a.push_back(ray_coeffs(fan, subset[i]));
                b.push_back(Rat(0));
            }
            auto x = rat_solve(std::move(a), std::move(b));
            if (x && in_closure_rational(*x))
                vertices.push_back(std::move(*x));
            return;
        }
        for (int i = start; i < (int)ineq_rays.size(); ++i) {
            subset[picked] = ineq_rays[i];
            choose(i + 1, picked + 1);
        }
    };
    choose(0, 0);
    if (vertices.empty())
        return {};

    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rat mn = vertices[0][j], mx = vertices[0][j];
        for (const auto& v : vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = rat_ceil(mn);
        hi[j] = rat_floor(mx);
    }

    Int volume = 1;
    for (int j = 0; j < n; ++j) {
        if (hi[j] < lo[j])
            return {};
        volume *= hi[j] - lo[j] + 1;
        if (volume > (Int(1) << 22))
            throw ContractViolation("face_lattice_points: bounding box too large");
    }

    auto in_closure_lattice = [&](const Deg& u) {
        if (fan.pairing(face.ray, u) != -1)
            return false;
        for (int e = 0; e < fan.ray_count(); ++e) {
            if (e == face.ray)
                continue;
            Int v = fan.pairing(e, u);
            if (face.signs[e] == 0 ? v != 0 : (face.signs[e] < 0 ? v > 0 : v < 0))
                return false;
        }
        return true;
    };

    std::vector<Deg> points;
    Deg u = lo;
    while (true) {
        if (in_closure_lattice(u))
            points.push_back(u);
        int j = 0;
        while (j < n) {
            if (u[j] < hi[j]) {
                ++u[j];
                break;
            }
            u[j] = lo[j];
            ++j;
        }
        if (j == n)
            break;
    }
    return points;
}

std::vector<Deg> candidate_degrees(const Fan& fan, int ray)
{
    fan.require_complete_simplicial();
    std::set<Deg> found;
    for (const auto& face : enumerate_faces(fan, ray)) {
        if (!face.bounded)
            continue;
        for (auto& u : face_lattice_points(fan, face))
            found.insert(std::move(u));
    }
    return std::vector<Deg>(found.begin(), found.end());
}

std::vector<Deg> box_degrees(const Fan& fan, int ray, const Int& box)
{
    const int n = fan.rank();
    std::vector<Deg> out;
    Deg u(n, -box);
    while (true) {
        if (fan.pairing(ray, u) == -1)
            out.push_back(u);
        int j = 0;
        while (j < n) {
            if (u[j] < box) {
                ++u[j];
                break;
            }
            u[j] = -box;
            ++j;
        }
        if (j == n)
            break;
    }
    return out;
}

} // namespace tcup
