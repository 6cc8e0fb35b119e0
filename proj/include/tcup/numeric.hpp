#ifndef TCUP_NUMERIC_HPP
#define TCUP_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace tcup {

// All arithmetic in this library is exact. Cohomology ranks are discrete;
// a single rounding error would change a verdict, so floating point is
// banned throughout.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/** Element of the character lattice M (or of N, for ray generators). */
using Deg = std::vector<Int>;

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b)
{
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/** gcd of all entries, nonnegative; 0 for the zero vector. */
inline Int content(const std::vector<Int>& v)
{
    Int g = 0;
    for (const Int& x : v)
        g = boost::multiprecision::gcd(g, x);
    return g;
}

inline bool lex_less(const Deg& a, const Deg& b)
{
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline Deg add_deg(const Deg& a, const Deg& b)
{
    Deg c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

inline std::string to_string(const Rat& q)
{
    return q.str();
}

inline std::string to_string(const Deg& u)
{
    std::string s = "(";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i)
            s += ",";
        s += u[i].str();
    }
    return s + ")";
}

} // namespace tcup

#endif
