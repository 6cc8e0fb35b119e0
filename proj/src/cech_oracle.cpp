#include "tcup/cech_oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tcup/errors.hpp"

namespace tcup {

// --------------------------------------------------------------------------
// Sparse elimination

int SparseEliminator::rank(std::vector<SparseRow> rows, int ncols)
{
    (void)ncols;
    std::map<int, SparseRow> pivots; // leading column -> reduced row
    int rank = 0;
    for (auto& row : rows) {
        auto& e = row.entries;
        while (!e.empty()) {
            auto it = pivots.find(e[0].first);
            if (it == pivots.end())
                break;
            // subtract factor * pivot row
            Rat factor = e[0].second; // pivot rows are normalized to lead 1
            const auto& pe = it->second.entries;
            std::vector<std::pair<int, Rat>> merged;
            merged.reserve(e.size() + pe.size());
            size_t i = 0, j = 0;
            while (i < e.size() || j < pe.size()) {
                if (j == pe.size() || (i < e.size() && e[i].first < pe[j].first)) {
                    merged.push_back(e[i++]);
                } else if (i == e.size() || pe[j].first < e[i].first) {
                    merged.emplace_back(pe[j].first, -factor * pe[j].second);
                    ++j;
                } else {
                    Rat v = e[i].second - factor * pe[j].second;
                    if (v != 0)
                        merged.emplace_back(e[i].first, v);
                    ++i;
                    ++j;
                }
            }
            e = std::move(merged);
        }
        if (e.empty())
            continue;
        Rat lead = e[0].second;
        for (auto& [c, v] : e)
            v /= lead;
        int lead_col = e[0].first;
        pivots.emplace(lead_col, std::move(row));
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rat>> SparseEliminator::solve(std::vector<SparseRow> rows,
                                                        std::vector<Rat> rhs, int ncols)
{
    if (rows.size() != rhs.size())
        throw ContractViolation("SparseEliminator::solve: rhs size mismatch");
    std::map<int, std::pair<SparseRow, Rat>> pivots;
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& e = rows[r].entries;
        Rat b = std::move(rhs[r]);
        while (!e.empty()) {
            auto it = pivots.find(e[0].first);
            if (it == pivots.end())
                break;
            Rat factor = e[0].second;
            const auto& pe = it->second.first.entries;
            std::vector<std::pair<int, Rat>> merged;
            merged.reserve(e.size() + pe.size());
            size_t i = 0, j = 0;
            while (i < e.size() || j < pe.size()) {
                if (j == pe.size() || (i < e.size() && e[i].first < pe[j].first)) {
                    merged.push_back(e[i++]);
                } else if (i == e.size() || pe[j].first < e[i].first) {
                    merged.emplace_back(pe[j].first, -factor * pe[j].second);
                    ++j;
                } else {
                    Rat v = e[i].second - factor * pe[j].second;
                    if (v != 0)
                        merged.emplace_back(e[i].first, v);
                    ++i;
                    ++j;
                }
            }
            e = std::move(merged);
            b -= factor * it->second.second;
        }
        if (e.empty()) {
            if (b != 0)
                return std::nullopt;
            continue;
        }
        Rat lead = e[0].second;
        for (auto& [c, v] : e)
            v /= lead;
        b /= lead;
        int lead_col = e[0].first;
        pivots.emplace(lead_col, std::make_pair(std::move(rows[r]), std::move(b)));
    }

    // Back substitution in decreasing pivot-column order; free columns are 0.
    std::vector<Rat> x(ncols, Rat(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [row, b] = it->second;
        Rat acc = b;
        const auto& e = row.entries;
        for (size_t i = 1; i < e.size(); ++i)
            acc -= e[i].second * x[e[i].first];
        x[it->first] = acc;
    }
    return x;
}

// --------------------------------------------------------------------------
// Tuple context

OracleContext::OracleContext(const Fan& fan) : fan_(&fan)
{
    fan.require_complete_simplicial();
    const int m = (int)fan.max_cones().size();
    for (int p = 0; p < 4; ++p) {
        std::vector<int> idx(p + 1);
        std::function<void(int, int)> gen = [&](int start, int depth) {
            if (depth == p + 1) {
                std::vector<int> t(idx.begin(), idx.end());
                std::vector<int> rays = fan.max_cones()[t[0]].rays;
                for (int q = 1; q <= p; ++q) {
                    std::vector<int> next;
                    std::set_intersection(rays.begin(), rays.end(),
                                          fan.max_cones()[t[q]].rays.begin(),
                                          fan.max_cones()[t[q]].rays.end(),
                                          std::back_inserter(next));
                    rays = std::move(next);
                }
                tuples_[p].push_back(std::move(t));
                tuple_rays_[p].push_back(std::move(rays));
                return;
            }
            for (int c = start; c < m; ++c) {
                idx[depth] = c;
                gen(c + 1, depth + 1);
            }
        };
        gen(0, 0);
    }
}

int OracleContext::tuple_index(int p, const std::vector<int>& t) const
{
    auto& list = tuples_[p];
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t)
        return -1;
    return (int)(it - list.begin());
}

// --------------------------------------------------------------------------
// Divisor-sheaf complexes

DivisorCechComplex build_divisor_complex(const OracleContext& ctx, int ray, const Deg& u)
{
    const Fan& fan = ctx.fan();
    DivisorCechComplex cx;
    cx.ray = ray;
    cx.u = u;
    std::vector<Int> value(fan.ray_count());
    for (int e = 0; e < fan.ray_count(); ++e)
        value[e] = fan.pairing(e, u);
    for (int p = 0; p < 4; ++p) {
        for (int t = 0; t < ctx.tuple_count(p); ++t) {
            bool ok = true;
            for (int e : ctx.tuple_rays(p, t)) {
                if (e == ray ? value[e] < -1 : value[e] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cx.basis_position[p][t] = (int)cx.admissible[p].size();
                cx.admissible[p].push_back(t);
            }
        }
    }
    return cx;
}

std::vector<SparseRow> divisor_differential(const OracleContext& ctx,
                                            const DivisorCechComplex& cx, int p)
{
    if (p < 0 || p > 2)
        throw ContractViolation("divisor_differential: p out of range");
    std::vector<SparseRow> rows;
    rows.reserve(cx.admissible[p + 1].size());
    for (int t : cx.admissible[p + 1]) {
        const auto& tuple = ctx.tuple(p + 1, t);
        SparseRow row;
        for (int k = 0; k <= p + 1; ++k) {
            std::vector<int> sub;
            sub.reserve(p + 1);
            for (int q = 0; q <= p + 1; ++q)
                if (q != k)
                    sub.push_back(tuple[q]);
            int si = ctx.tuple_index(p, sub);
            auto it = cx.basis_position[p].find(si);
            if (it == cx.basis_position[p].end())
                continue; // facet chart does not admit the character
            row.entries.emplace_back(it->second, Rat(k % 2 == 0 ? 1 : -1));
        }
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    return rows;
}

int divisor_cohomology_dim(const OracleContext& ctx, int ray, const Deg& u, int p)
{
    if (p < 0 || p > 2)
        throw ContractViolation("divisor_cohomology_dim: p must be 0, 1 or 2");
    DivisorCechComplex cx = build_divisor_complex(ctx, ray, u);
    int rank_dp = SparseEliminator::rank(divisor_differential(ctx, cx, p), cx.dim(p));
    int kernel = cx.dim(p) - rank_dp;
    if (p == 0)
        return kernel;
    int rank_prev = SparseEliminator::rank(divisor_differential(ctx, cx, p - 1), cx.dim(p - 1));
    return kernel - rank_prev;
}

// --------------------------------------------------------------------------
// Singular cochains / antisymmetrization

Rat SingularCochain::at(const std::vector<int>& t) const
{
    auto it = entries.find(t);
    return it == entries.end() ? Rat(0) : it->second;
}

void SingularCochain::set(const std::vector<int>& t, Rat v)
{
    if ((int)t.size() != p + 1)
        throw ContractViolation("SingularCochain::set: tuple arity mismatch");
    if (v == 0)
        entries.erase(t);
    else
        entries[t] = std::move(v);
}

namespace {

void for_each_tuple(int index_count, int arity, const std::function<void(std::vector<int>&)>& fn)
{
    std::vector<int> t(arity, 0);
    while (true) {
        fn(t);
        int j = arity - 1;
        while (j >= 0) {
            if (t[j] + 1 < index_count) {
                ++t[j];
                break;
            }
            t[j] = 0;
            --j;
        }
        if (j < 0)
            break;
    }
}

void for_each_sorted_tuple(int index_count, int arity,
                           const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> t(arity);
    std::function<void(int, int)> gen = [&](int start, int depth) {
        if (depth == arity) {
            fn(t);
            return;
        }
        for (int c = start; c < index_count; ++c) {
            t[depth] = c;
            gen(c + 1, depth + 1);
        }
    };
    gen(0, 0);
}

int permutation_sign(std::vector<int> perm)
{
    int sign = 1;
    for (size_t i = 0; i + 1 < perm.size(); ++i)
        for (size_t j = 0; j + 1 < perm.size() - i; ++j)
            if (perm[j] > perm[j + 1]) {
                std::swap(perm[j], perm[j + 1]);
                sign = -sign;
            }
    return sign;
}

} // namespace

SingularCochain singular_differential(const SingularCochain& f, int index_count)
{
    SingularCochain g;
    g.p = f.p + 1;
    for_each_tuple(index_count, f.p + 2, [&](std::vector<int>& t) {
        Rat acc = 0;
        std::vector<int> sub(f.p + 1);
        for (int k = 0; k <= f.p + 1; ++k) {
            int pos = 0;
            for (int q = 0; q <= f.p + 1; ++q)
                if (q != k)
                    sub[pos++] = t[q];
            Rat v = f.at(sub);
            acc += (k % 2 == 0) ? v : -v;
        }
        if (acc != 0)
            g.entries[t] = acc;
    });
    return g;
}

SingularCochain include_alternating(const CechCocycle& c, int index_count)
{
    SingularCochain f;
    f.p = c.p;
    for_each_tuple(index_count, c.p + 1, [&](std::vector<int>& t) {
        Rat v = c.at(t);
        if (v != 0)
            f.entries[t] = v;
    });
    return f;
}

CechCocycle antisymmetrize(const SingularCochain& f, int index_count)
{
    if (f.p > 2)
        throw ContractViolation(
            "antisymmetrize: only p <= 2 is supported (factorial denominators)");
    CechCocycle out;
    out.p = f.p;
    const int arity = f.p + 1;
    Rat factorial = 1;
    for (int i = 2; i <= arity; ++i)
        factorial *= i;
    std::vector<int> positions(arity);
    for (int i = 0; i < arity; ++i)
        positions[i] = i;
    for_each_sorted_tuple(index_count, arity, [&](const std::vector<int>& t) {
        Rat acc = 0;
        std::vector<int> perm = positions;
        std::vector<int> permuted(arity);
        do {
            for (int i = 0; i < arity; ++i)
                permuted[i] = t[perm[i]];
            Rat v = f.at(permuted);
            if (v != 0)
                acc += permutation_sign(perm) * v;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (acc != 0)
            out.set(t, acc / factorial);
    });
    return out;
}

CechCocycle alternating_differential(const CechCocycle& c, int index_count)
{
    CechCocycle g;
    g.p = c.p + 1;
    for_each_sorted_tuple(index_count, c.p + 2, [&](const std::vector<int>& t) {
        Rat acc = 0;
        std::vector<int> sub(c.p + 1);
        for (int k = 0; k <= c.p + 1; ++k) {
            int pos = 0;
            for (int q = 0; q <= c.p + 1; ++q)
                if (q != k)
                    sub[pos++] = t[q];
            Rat v = c.at(sub);
            acc += (k % 2 == 0) ? v : -v;
        }
        if (acc != 0)
            g.set(t, acc);
    });
    return g;
}

// --------------------------------------------------------------------------
// Derivation-valued cochains

Derivation DerivationCochain::at(std::vector<int> t) const
{
    if ((int)t.size() != p + 1)
        throw ContractViolation("DerivationCochain::at: tuple arity mismatch");
    int sign = 1;
    for (size_t i = 0; i + 1 < t.size(); ++i)
        for (size_t j = 0; j + 1 < t.size() - i; ++j)
            if (t[j] > t[j + 1]) {
                std::swap(t[j], t[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1])
            return {};
    auto it = entries.find(t);
    if (it == entries.end())
        return {};
    return sign == 1 ? it->second : it->second * Rat(-1);
}

void DerivationCochain::set(std::vector<int> t, Derivation v)
{
    if ((int)t.size() != p + 1)
        throw ContractViolation("DerivationCochain::set: tuple arity mismatch");
    if (!std::is_sorted(t.begin(), t.end()))
        throw ContractViolation("DerivationCochain::set: tuple must be sorted");
    if (v.is_zero())
        entries.erase(t);
    else
        entries[std::move(t)] = std::move(v);
}

namespace {

Rat antisym_product(const std::vector<Rat>& f, const std::vector<Rat>& g, int i, int j, int k)
{
    return f[i] * g[j] - f[j] * g[i] + f[k] * g[i] - f[i] * g[k] + f[j] * g[k] - f[k] * g[j];
}

void check_span_pair(const FirstOrderSpan& a, const FirstOrderSpan& b, const Fan& fan)
{
    if (a.value_per_cone.size() != fan.max_cones().size() ||
        b.value_per_cone.size() != fan.max_cones().size())
        throw ContractViolation("span cone values do not match the fan");
    if (fan.pairing(a.ray, a.u) != -1 || fan.pairing(b.ray, b.u) != -1)
        throw ContractViolation("first-order spans must satisfy rho(u) = -1");
}

} // namespace

DerivationCochain tangent_cup_direct(const Fan& fan, const FirstOrderSpan& a,
                                     const FirstOrderSpan& b)
{
    check_span_pair(a, b, fan);
    const int m = (int)fan.max_cones().size();
    const Deg w = add_deg(a.u, b.u);
    const Rat ca = Rat(fan.pairing(a.ray, b.u)); // coefficient of d(ray_b, w)
    const Rat cb = Rat(fan.pairing(b.ray, a.u)); // coefficient of d(ray_a, w)
    DerivationCochain theta;
    theta.p = 2;
    for_each_sorted_tuple(m, 3, [&](const std::vector<int>& t) {
        Rat s = antisym_product(a.value_per_cone, b.value_per_cone, t[0], t[1], t[2]) / 2;
        if (s == 0)
            return;
        Derivation d = Derivation::symbol(b.ray, w, s * ca) - Derivation::symbol(a.ray, w, s * cb);
        theta.set(t, std::move(d));
    });
    return theta;
}

DerivationCochain tangent_cup_via_bracket(const Fan& fan, const FirstOrderSpan& a,
                                          const FirstOrderSpan& b)
{
    check_span_pair(a, b, fan);
    const int m = (int)fan.max_cones().size();
    auto one_cocycle = [&](const FirstOrderSpan& f) {
        // Image of the class in the tangent presentation: (f_t - f_s) d(ray, u).
        std::map<std::pair<int, int>, Derivation> g;
        for (int s = 0; s < m; ++s)
            for (int t = s + 1; t < m; ++t)
                g[{s, t}] =
                    Derivation::symbol(f.ray, f.u, f.value_per_cone[t] - f.value_per_cone[s]);
        return g;
    };
    auto ga = one_cocycle(a);
    auto gb = one_cocycle(b);
    auto at = [](std::map<std::pair<int, int>, Derivation>& g, int i, int j) {
        return g.at({i, j});
    };
    DerivationCochain theta;
    theta.p = 2;
    for_each_sorted_tuple(m, 3, [&](const std::vector<int>& t) {
        int i = t[0], j = t[1], k = t[2];
        Derivation acc = bracket(fan, at(ga, i, j), at(gb, j, k));
        acc = acc + bracket(fan, at(ga, i, j), at(gb, i, k));
        acc = acc + bracket(fan, at(ga, i, k), at(gb, j, k));
        acc = acc - bracket(fan, at(ga, i, k), at(gb, i, j));
        acc = acc - bracket(fan, at(ga, j, k), at(gb, i, k));
        acc = acc - bracket(fan, at(ga, j, k), at(gb, i, j));
        acc = acc * Rat(1, 6);
        if (!acc.is_zero())
            theta.set(t, std::move(acc));
    });
    return theta;
}

DivisorLift divisor_lift(const OracleContext& ctx, const FirstOrderSpan& a,
                         const FirstOrderSpan& b)
{
    const Fan& fan = ctx.fan();
    check_span_pair(a, b, fan);
    if (a.ray == b.ray)
        throw ContractViolation("divisor_lift: requires distinct divisor rays");
    const Deg w = add_deg(a.u, b.u);
    const Rat coeff_a = Rat(fan.pairing(b.ray, a.u)) / 2;
    const Rat coeff_b = Rat(fan.pairing(a.ray, b.u)) / 2;

    DivisorLift lift;
    lift.on_a.p = 2;
    lift.on_b.p = 2;
    for (int t = 0; t < ctx.tuple_count(2); ++t) {
        const auto& tuple = ctx.tuple(2, t);
        Rat s = antisym_product(a.value_per_cone, b.value_per_cone, tuple[0], tuple[1], tuple[2]);
        if (s == 0)
            continue;
        // Regularity audit: a nonzero entry must be a section on its chart.
        Cone chart{ctx.tuple_rays(2, t)};
        if (coeff_a != 0) {
            if (!fan.section_membership(a.ray, w, chart))
                throw std::logic_error("divisor_lift: entry not regular on O(D_a) chart");
            lift.on_a.set(tuple, coeff_a * s);
        }
        if (coeff_b != 0) {
            if (!fan.section_membership(b.ray, w, chart))
                throw std::logic_error("divisor_lift: entry not regular on O(D_b) chart");
            lift.on_b.set(tuple, coeff_b * s);
        }
    }
    return lift;
}

namespace {

bool lifted_class_vanishes(const OracleContext& ctx, const CechCocycle& kappa, int ray,
                           const Deg& w)
{
    DivisorCechComplex cx = build_divisor_complex(ctx, ray, w);

    // Closedness within the admissible complex.
    for (int qi : cx.admissible[3]) {
        Rat acc = 0;
        const auto& quad = ctx.tuple(3, qi);
        for (int k = 0; k < 4; ++k) {
            std::vector<int> sub;
            for (int q = 0; q < 4; ++q)
                if (q != k)
                    sub.push_back(quad[q]);
            Rat v = kappa.at(sub);
            acc += (k % 2 == 0) ? v : -v;
        }
        if (acc != 0)
            throw std::logic_error("divisor lift is not closed");
    }

    // Support audit: entries on non-admissible charts must vanish.
    for (const auto& [tuple, v] : kappa.entries) {
        int ti = ctx.tuple_index(2, tuple);
        if (!cx.basis_position[2].count(ti) && v != 0)
            throw std::logic_error("divisor lift supported outside its admissible charts");
    }

    std::vector<SparseRow> d1 = divisor_differential(ctx, cx, 1);
    std::vector<Rat> rhs;
    rhs.reserve(cx.admissible[2].size());
    for (int t : cx.admissible[2])
        rhs.push_back(kappa.at(ctx.tuple(2, t)));
    return SparseEliminator::solve(std::move(d1), std::move(rhs), cx.dim(1)).has_value();
}

} // namespace

DivisorRouteResult divisor_route_vanishes(const OracleContext& ctx, const FirstOrderSpan& a,
                                          const FirstOrderSpan& b)
{
    DivisorLift lift = divisor_lift(ctx, a, b);
    const Deg w = add_deg(a.u, b.u);
    DivisorRouteResult res;
    res.class_a_vanishes = lifted_class_vanishes(ctx, lift.on_a, a.ray, w);
    res.class_b_vanishes = lifted_class_vanishes(ctx, lift.on_b, b.ray, w);
    res.vanishes = res.class_a_vanishes && res.class_b_vanishes;
    return res;
}

bool tangent_two_cocycle_vanishes(const OracleContext& ctx, const DerivationCochain& theta,
                                  const Deg& w)
{
    const Fan& fan = ctx.fan();
    const int n = fan.rank();
    if (theta.p != 2)
        throw ContractViolation("tangent_two_cocycle_vanishes: expected a two-cochain");

    // Unknowns: per pair tuple, the coefficients of chart-admissible ray
    // derivations d(e, w).
    struct PairVars {
        int offset;
        std::vector<int> rays; // admissible rays on the pair chart
    };
    std::vector<PairVars> vars(ctx.tuple_count(1));
    int total = 0;
    for (int t = 0; t < ctx.tuple_count(1); ++t) {
        vars[t].offset = total;
        for (int e = 0; e < fan.ray_count(); ++e) {
            Cone chart{ctx.tuple_rays(1, t)};
            if (fan.section_membership(e, w, chart))
                vars[t].rays.push_back(e);
        }
        total += (int)vars[t].rays.size();
    }

    // Equations: per triple and per lattice coordinate, matching the
    // N-valued functional of the derivation on both sides.
    std::vector<SparseRow> rows;
    std::vector<Rat> rhs;
    for (int t = 0; t < ctx.tuple_count(2); ++t) {
        const auto& triple = ctx.tuple(2, t);
        Derivation target = theta.at(triple);
        for (int coord = 0; coord < n; ++coord) {
            SparseRow row;
            for (int k = 0; k < 3; ++k) {
                std::vector<int> sub;
                for (int q = 0; q < 3; ++q)
                    if (q != k)
                        sub.push_back(triple[q]);
                int pi = ctx.tuple_index(1, sub);
                Rat sign = (k % 2 == 0) ? 1 : -1;
                for (size_t v = 0; v < vars[pi].rays.size(); ++v) {
                    Rat c = sign * Rat(fan.ray(vars[pi].rays[v])[coord]);
                    if (c != 0)
                        row.entries.emplace_back(vars[pi].offset + (int)v, c);
                }
            }
            std::sort(row.entries.begin(), row.entries.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            // merge duplicate columns
            std::vector<std::pair<int, Rat>> merged;
            for (auto& [c, v] : row.entries) {
                if (!merged.empty() && merged.back().first == c)
                    merged.back().second += v;
                else
                    merged.emplace_back(c, v);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return e.second == 0; }),
                         merged.end());
            row.entries = std::move(merged);

            Rat b = 0;
            for (const auto& [sym, c] : target.terms()) {
                if (sym.second != w)
                    throw ContractViolation("tangent_two_cocycle_vanishes: mixed degrees");
                b += c * Rat(fan.ray(sym.first)[coord]);
            }
            rows.push_back(std::move(row));
            rhs.push_back(std::move(b));
        }
    }
    return SparseEliminator::solve(std::move(rows), std::move(rhs), total).has_value();
}

} // namespace tcup
