#include "tcup/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tcup/errors.hpp"

namespace tcup {

LinearConstraint LinearConstraint::ge(std::vector<Rat> c, Rat r)
{
    for (Rat& x : c)
        x = -x;
    return {std::move(c), -r, Rel::Le};
}

LinearConstraint LinearConstraint::gt(std::vector<Rat> c, Rat r)
{
    for (Rat& x : c)
        x = -x;
    return {std::move(c), -r, Rel::Lt};
}

namespace {

struct Ineq {
    std::vector<Rat> c;
    Rat r;
    bool strict;
};

// Scale to coprime integer coefficients; proportional constraints collapse
// to one representative and coefficient growth stays polynomial.
void normalize(Ineq& q)
{
    Int l = 1;
    for (const Rat& x : q.c)
        l = boost::multiprecision::lcm(l, denominator(x));
    l = boost::multiprecision::lcm(l, denominator(q.r));
    Int g = 0;
    for (const Rat& x : q.c)
        g = boost::multiprecision::gcd(g, numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, numerator(q.r) * (l / denominator(q.r)));
    if (g == 0)
        return;
    Rat scale = Rat(l, g);
    for (Rat& x : q.c)
        x *= scale;
    q.r *= scale;
}

bool operator<(const Ineq& a, const Ineq& b)
{
    if (a.strict != b.strict)
        return a.strict < b.strict;
    if (a.r != b.r)
        return a.r < b.r;
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

struct Stage {
    int var;
    std::vector<Ineq> lower; // c[var] < 0, so these bound x_var from below
    std::vector<Ineq> upper; // c[var] > 0
};

} // namespace

std::optional<std::vector<Rat>> fm_feasible_point(const std::vector<LinearConstraint>& constraints,
                                                  int num_vars)
{
    const int n = num_vars;
    for (const auto& c : constraints)
        if ((int)c.coeffs.size() != n)
            throw ContractViolation("fm: constraint arity does not match num_vars");

    std::vector<Ineq> ineqs;
    std::vector<std::vector<Rat>> eqs; // c·x = r stored as [c..., r]
    for (const auto& c : constraints) {
        if (c.rel == Rel::Eq) {
            std::vector<Rat> row = c.coeffs;
            row.push_back(c.rhs);
            eqs.push_back(std::move(row));
        } else {
            ineqs.push_back({c.coeffs, c.rhs, c.rel == Rel::Lt});
        }
    }

    std::vector<bool> eliminated(n, false);
    // Gaussian elimination of equalities.  substitution[v] holds an affine
    // expression [a_0..a_{n-1}, const] with x_v = a·x + const; expressions are
    // kept reduced so they only ever mention variables left for FM.
    std::map<int, std::vector<Rat>> substitution;

    for (size_t ei = 0; ei < eqs.size(); ++ei) {
        auto& e = eqs[ei]; // already reduced against earlier pivots
        int pivot = -1;
        for (int j = 0; j < n; ++j)
            if (!eliminated[j] && e[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) {
            if (e[n] != 0)
                return std::nullopt; // 0 = nonzero
            continue;
        }
        std::vector<Rat> expr(n + 1, Rat(0));
        for (int j = 0; j < n; ++j)
            if (j != pivot)
                expr[j] = -e[j] / e[pivot];
        expr[n] = e[n] / e[pivot];
        eliminated[pivot] = true;

        for (size_t fi = ei + 1; fi < eqs.size(); ++fi) {
            auto& f = eqs[fi];
            if (f[pivot] == 0)
                continue;
            Rat g = f[pivot];
            f[pivot] = 0;
            for (int j = 0; j < n; ++j)
                f[j] += g * expr[j];
            f[n] -= g * expr[n];
        }
        for (auto& [v, ex] : substitution) {
            if (ex[pivot] == 0)
                continue;
            Rat g = ex[pivot];
            ex[pivot] = 0;
            for (int j = 0; j < n; ++j)
                ex[j] += g * expr[j];
            ex[n] += g * expr[n];
        }
        substitution[pivot] = std::move(expr);
    }

    for (auto& q : ineqs) {
        for (auto& [v, expr] : substitution) {
            if (q.c[v] == 0)
                continue;
            Rat g = q.c[v];
            q.c[v] = 0;
            for (int j = 0; j < n; ++j)
                q.c[j] += g * expr[j];
            q.r -= g * expr[n];
        }
    }

    std::vector<Stage> stages;
    std::vector<Ineq> current = std::move(ineqs);
    for (int v = 0; v < n; ++v) {
        if (eliminated[v])
            continue;
        Stage st;
        st.var = v;
        std::vector<Ineq> passthrough;
        for (auto& q : current) {
            if (q.c[v] == 0)
                passthrough.push_back(std::move(q));
            else if (q.c[v] > 0)
                st.upper.push_back(std::move(q));
            else
                st.lower.push_back(std::move(q));
        }
        std::set<Ineq> combined;
        for (const auto& lo : st.lower) {
            for (const auto& up : st.upper) {
                Ineq q;
                q.c.assign(n, Rat(0));
                Rat a = up.c[v];
                Rat b = -lo.c[v];
                for (int j = 0; j < n; ++j)
                    q.c[j] = a * lo.c[j] + b * up.c[j];
                q.r = a * lo.r + b * up.r;
                q.strict = lo.strict || up.strict;
                q.c[v] = 0;
                normalize(q);
                combined.insert(std::move(q));
            }
        }
        current = std::move(passthrough);
        for (const auto& q : combined)
            current.push_back(q);
        stages.push_back(std::move(st));
        eliminated[v] = true;
    }

    for (const auto& q : current) {
        if (q.strict ? !(Rat(0) < q.r) : !(Rat(0) <= q.r))
            return std::nullopt;
    }

    // Witness, back to front.  FM guarantees each stage interval is nonempty
    // at the values already fixed.
    std::vector<Rat> x(n, Rat(0));
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        auto bound = [&](const Ineq& q) -> Rat {
            Rat acc = q.r;
            for (int j = 0; j < n; ++j)
                if (j != it->var)
                    acc -= q.c[j] * x[j];
            return Rat(acc / q.c[it->var]);
        };
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo = 0, hi = 0;
        for (const auto& q : it->lower) {
            Rat b = bound(q);
            if (!has_lo || b > lo) {
                lo = b;
                lo_strict = q.strict;
                has_lo = true;
            } else if (b == lo) {
                lo_strict = lo_strict || q.strict;
            }
        }
        for (const auto& q : it->upper) {
            Rat b = bound(q);
            if (!has_hi || b < hi) {
                hi = b;
                hi_strict = q.strict;
                has_hi = true;
            } else if (b == hi) {
                hi_strict = hi_strict || q.strict;
            }
        }
        Rat val;
        if (has_lo && has_hi)
            val = (lo == hi) ? lo : (lo + hi) / 2;
        else if (has_lo)
            val = lo_strict ? lo + 1 : lo;
        else if (has_hi)
            val = hi_strict ? hi - 1 : hi;
        else
            val = 0;
        x[it->var] = val;
    }
    for (const auto& [v, expr] : substitution) {
        Rat val = expr[n];
        for (int j = 0; j < n; ++j)
            val += expr[j] * x[j];
        x[v] = val;
    }
    return x;
}

bool fm_feasible(const std::vector<LinearConstraint>& constraints, int num_vars)
{
    return fm_feasible_point(constraints, num_vars).has_value();
}

} // namespace tcup
