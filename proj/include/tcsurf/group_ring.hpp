#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "tcsurf/gf2.hpp"
#include "tcsurf/groups.hpp"

namespace tcsurf {

/// Finitely supported element of a group ring: a map from group elements to
/// nonzero coefficients (integers or GF(2)).  All mutations keep the support
/// reduced, so equality is structural.
template <class G, class C>
class RingElement {
public:
    using TermMap = std::map<G, C>;

    RingElement() = default;

    static RingElement zero() { return {}; }
    static RingElement unit() { return of(G::identity()); }
    static RingElement of(const G& g, C c = C(1)) {
        RingElement r;
        r.addTerm(g, c);
        return r;
    }

    void addTerm(const G& g, C c) {
        if (coeffIsZero(c)) return;
        auto [it, fresh] = terms_.try_emplace(g, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeffIsZero(it->second)) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    C augmentation() const {
        C s = C(0);
        for (const auto& [g, c] : terms_) s = s + c;
        return s;
    }
    bool inAugmentationIdeal() const { return coeffIsZero(augmentation()); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        RingElement r = a;
        for (const auto& [g, c] : b.terms_) r.addTerm(g, c);
        return r;
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        RingElement r = a;
        for (const auto& [g, c] : b.terms_) r.addTerm(g, -c);
        return r;
    }
    RingElement operator-() const {
        RingElement r;
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        RingElement r;
        for (const auto& [g, c] : a.terms_)
            for (const auto& [h, d] : b.terms_) r.addTerm(g * h, c * d);
        return r;
    }
    RingElement scaled(C s) const {
        RingElement r;
        for (const auto& [g, c] : terms_) r.addTerm(g, c * s);
        return r;
    }

    RingElement leftMultiplied(const G& g) const {
        RingElement r;
        for (const auto& [h, c] : terms_) r.terms_.emplace(g * h, c);
        return r;
    }
    RingElement rightMultiplied(const G& g) const {
        RingElement r;
        for (const auto& [h, c] : terms_) r.terms_.emplace(h * g, c);
        return r;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

/// The two-sided action of a pair (a,b): every support element u becomes
/// a*u*inverse(b), extended linearly.
template <class G, class C>
RingElement<G, C> biAct(const PairElement<G>& p, const RingElement<G, C>& u) {
    return u.leftMultiplied(p.left).rightMultiplied(inverse(p.right));
}

template <class G>
RingElement<G, Gf2> toGf2(const RingElement<G, int>& u) {
    RingElement<G, Gf2> r;
    for (const auto& [g, c] : u.terms()) r.addTerm(g, Gf2(c));
    return r;
}

/// Apply a group homomorphism image(g) to every support element, merging
/// collisions.
template <class H, class G, class C, class F>
RingElement<H, C> mapSupport(const RingElement<G, C>& u, F&& image) {
    RingElement<H, C> r;
    for (const auto& [g, c] : u.terms()) r.addTerm(image(g), c);
    return r;
}

template <class G>
std::string render(const RingElement<G, int>& u) {
    if (u.isZero()) return "0";
    std::string out;
    for (const auto& [g, c] : u.terms()) {
        int mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += render(g);
    }
    return out;
}

template <class G>
std::string render(const RingElement<G, Gf2>& u) {
    if (u.isZero()) return "0";
    std::string out;
    for (const auto& [g, c] : u.terms()) {
        (void)c;
        if (!out.empty()) out += "+";
        out += render(g);
    }
    return out;
}

} // namespace tcsurf
