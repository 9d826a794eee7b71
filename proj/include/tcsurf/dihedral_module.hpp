#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "tcsurf/f2linear.hpp"
#include "tcsurf/group_ring.hpp"
#include "tcsurf/groups.hpp"
#include "tcsurf/tensor.hpp"

namespace tcsurf {

/// Element of the six-dimensional GF(2) quotient algebra of the dihedral
/// group algebra by the two-sided ideal generated by (y-1)^3.  Basis order
/// (1, y, y^2, x, y*x, y^2*x); bit k is y^k, bit 3+k is y^k*x.  The
/// rewriting rules are y^3 = 1+y+y^2 (hence y^4 = 1), x^2 = 1 and
/// x*y = y^-1*x.
struct QuotElt {
    std::uint8_t bits = 0;

    friend QuotElt operator+(QuotElt a, QuotElt b) {
        return {static_cast<std::uint8_t>(a.bits ^ b.bits)};
    }
    friend bool operator==(QuotElt a, QuotElt b) { return a.bits == b.bits; }
};

/// y^p reduced in the quotient, as a mask over {1, y, y^2}.
std::uint8_t reducedYPower(long long p);

QuotElt quotFromDihedral(const DihedralElement& g);
QuotElt quotMul(QuotElt a, QuotElt b);
Gf2 quotAugmentation(QuotElt a);

extern const Gf2Space kJSpace;  // basis v, w, wx, w2, w2x

/// Coordinates of an augmentation-zero algebra element in the J basis
/// (v = x+1, w = y+1, wx = y*x+x, w2 = y^2+1, w2x = y^2*x+x).
Gf2Vec quotToJ(QuotElt a);
QuotElt quotFromJ(const Gf2Vec& coords);

/// J coordinates of g - 1 for a dihedral group element, by the mod-4
/// reduction rule: y^n - 1 maps to 0 / w / w2 / w+w2 as n is 0/1/2/3 mod 4,
/// and y^n*x - 1 = (y^n - 1)x + (x - 1) maps to the shifted image plus v.
Gf2Vec reduceToJBasisElem(const DihedralElement& g);

/// Linear extension to an augmentation-zero GF(2) group-ring element;
/// rejects input outside the augmentation ideal.
Gf2Vec reduceToJ(const RingElement<DihedralElement, Gf2>& u);

/// Sparse element of the third exterior power of the dihedral augmentation
/// ideal.  A basis triple {g1,g2,g3} (strictly increasing, identities
/// excluded) stands for (g1-1) ^ (g2-1) ^ (g3-1).
class DWedge {
public:
    using Key = std::array<DihedralElement, 3>;
    using TermMap = std::map<Key, Gf2>;

    /// Add c * (a-1)^(b-1)^(c-1); repeated or identity entries kill the term.
    void addTriple(DihedralElement g1, DihedralElement g2, DihedralElement g3, Gf2 c);

    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    friend DWedge operator+(const DWedge& a, const DWedge& b);
    friend bool operator==(const DWedge& a, const DWedge& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// Diagonal bi-action on wedge classes: each factor (g-1) becomes
/// (a g b^-1 - 1) - (a b^-1 - 1), expanded multilinearly.
DWedge dwedgeBiAct(const PairElement<DihedralElement>& p, const DWedge& w);

/// Push a sparse wedge into the ten-dimensional exterior cube of J.
Gf2Vec dwedgeToCube(const DWedge& w);

/// Projection of a rank-4 tensor over the Klein group (satisfying the
/// per-slot marginal invariant) onto the third exterior power of the
/// dihedral augmentation ideal: slot one survives exactly when its image in
/// the order-two quotient is nontrivial, the remaining slots pass to the
/// dihedral group and are wedged in the basis {g-1}.
DWedge projectP(const TensorElement<KleinElement>& t);

std::string render(const DWedge& w);

} // namespace tcsurf
