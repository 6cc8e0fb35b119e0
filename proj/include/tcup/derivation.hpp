#ifndef TCUP_DERIVATION_HPP
#define TCUP_DERIVATION_HPP

#include <map>
#include <utility>

#include "tcup/fan.hpp"

namespace tcup {

/** Formal combination of characters: degree -> coefficient. */
using CharCombo = std::map<Deg, Rat>;

/**
 * Formal rational combination of the ray derivations d(ray, w), the images
 * of local divisor sections under the Euler map.  A ray derivation acts on
 * characters by d(ray, w)(chi^v) = ray(v) * chi^{w+v}.  Stored in canonical
 * sorted form with no zero coefficients, so operator== is structural
 * equality of normal forms.
 */
class Derivation {
public:
    Derivation() = default;
    static Derivation symbol(int ray, Deg w, Rat coeff = Rat(1));

    Derivation& add(int ray, const Deg& w, const Rat& coeff);
    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation operator*(const Rat& c) const;
    bool operator==(const Derivation& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::pair<int, Deg>, Rat>& terms() const { return terms_; }

    /** Action on a single character chi^v. */
    CharCombo apply(const Fan& fan, const Deg& v) const;
    /** Action extended linearly to a character combination. */
    CharCombo apply(const Fan& fan, const CharCombo& c) const;

private:
    std::map<std::pair<int, Deg>, Rat> terms_;
};

/**
 * Lie bracket, extended bilinearly from
 * [d(r,u), d(r',u')] = r(u') d(r',u+u') - r'(u) d(r,u+u').
 */
Derivation bracket(const Fan& fan, const Derivation& a, const Derivation& b);

} // namespace tcup

#endif
