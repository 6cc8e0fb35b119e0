#include "tcup/derivation.hpp"

namespace tcup {

Derivation Derivation::symbol(int ray, Deg w, Rat coeff)
{
    Derivation d;
    d.add(ray, w, coeff);
    return d;
}

Derivation& Derivation::add(int ray, const Deg& w, const Rat& coeff)
{
    if (coeff == 0)
        return *this;
    auto key = std::make_pair(ray, w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Derivation Derivation::operator+(const Derivation& o) const
{
    Derivation r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add(k.first, k.second, c);
    return r;
}

Derivation Derivation::operator-(const Derivation& o) const
{
    Derivation r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add(k.first, k.second, -c);
    return r;
}

Derivation Derivation::operator*(const Rat& c) const
{
    Derivation r;
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_[k] = v * c;
    return r;
}

CharCombo Derivation::apply(const Fan& fan, const Deg& v) const
{
    CharCombo out;
    for (const auto& [k, c] : terms_) {
        Rat val = c * Rat(fan.pairing(k.first, v));
        if (val == 0)
            continue;
        Deg w = add_deg(k.second, v);
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(std::move(w), val);
        else {
            it->second += val;
            if (it->second == 0)
                out.erase(it);
        }
    }
    return out;
}

CharCombo Derivation::apply(const Fan& fan, const CharCombo& combo) const
{
    CharCombo out;
    for (const auto& [v, coeff] : combo) {
        for (auto& [w, val] : apply(fan, v)) {
            auto it = out.find(w);
            Rat scaled = val * coeff;
            if (scaled == 0)
                continue;
            if (it == out.end())
                out.emplace(w, scaled);
            else {
                it->second += scaled;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

Derivation bracket(const Fan& fan, const Derivation& a, const Derivation& b)
{
    Derivation out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const auto& [ra, ua] = ka;
            const auto& [rb, ub] = kb;
            Rat c = ca * cb;
            Deg sum = add_deg(ua, ub);
            out.add(rb, sum, c * Rat(fan.pairing(ra, ub)));
            out.add(ra, sum, -c * Rat(fan.pairing(rb, ua)));
        }
    }
    return out;
}

} // namespace tcup
