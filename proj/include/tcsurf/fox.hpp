#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcsurf/bar.hpp"
#include "tcsurf/f2linear.hpp"
#include "tcsurf/free_word.hpp"

namespace tcsurf {

/// Length-two free resolution of the integers over a one-relator surface
/// group, with ranks (1, r1, 1).  d1[i] is the coefficient of e0 in the
/// boundary of the i-th degree-one generator; d2[i] is the coefficient of
/// that generator in the boundary of the single degree-two generator.
struct Resolution {
    std::vector<std::string> generatorNames;
    std::string basis0;
    std::vector<std::string> basis1;
    std::string basis2;
    std::vector<FreeRingElement> d1;
    std::vector<FreeRingElement> d2;

    int rank1() const { return static_cast<int>(basis1.size()); }
};

/// The Klein bottle resolution: bases {e0}, {e1_1, e1_2}, {e2} over the
/// generators x, y with relator y*x*y*x^-1, giving
///   d(e1_1) = (x-1) e0,  d(e1_2) = (y-1) e0,
///   d(e2)   = (y-1) e1_1 + (1+y*x) e1_2.
Resolution kleinResolution();

/// Genus-g surface resolution with relator a_1^2 ... a_g^2: bases {e0},
/// {f1_1..f1_g}, {w_g}; the degree-two row consists of the Fox derivatives
///   d(w_g) = sum_i a_1^2...a_{i-1}^2 (1 + a_i) f1_i.
Resolution surfaceResolution(int genus);

/// Genus-reduction chain map induced by a_i -> a_i (i < g), a_g -> 1:
/// degree 0 and 2 are identities on the generators, degree 1 keeps
/// f1_i (i < g) and kills f1_g.
struct ChainMapSpec {
    int genusFrom = 0;
    int genusTo = 0;
    FreeRingElement deg0;
    std::vector<std::vector<FreeRingElement>> deg1; // (g-1) x g over the target group
    FreeRingElement deg2;
    std::vector<FreeWord> generatorImages; // a_i images in the target free group
};

ChainMapSpec phiChainMap(int genus);

/// Word-level verification of the chain-map identity for phi: the squares
/// at degrees 1 and 2 commute after generator substitution and free
/// reduction.
bool verifyPhiChainMap(int genus, std::string* detail = nullptr);

/// The Klein resolution mapped into the bar resolution:
///   e0 -> [], e1_1 -> [x], e1_2 -> [y], e2 -> [y|x] + [y*x|y].
struct KleinBarChainMap {
    BarChain<KleinElement> e0Image;
    BarChain<KleinElement> e11Image;
    BarChain<KleinElement> e12Image;
    BarChain<KleinElement> e2Image;
};

KleinBarChainMap barChainMap();

/// Exact verification that barChainMap is a chain map over the integral
/// group ring, using Klein normal forms.
bool verifyBarChainMap(std::string* detail = nullptr);

KleinElement kleinWordValue(const FreeWord& w);
RingElement<KleinElement, int> kleinRingValue(const FreeRingElement& u);

/// Homology of the surface resolution with trivial GF(2) coefficients
/// (every group element maps to 1): returns (dim H0, dim H1, dim H2).
std::array<int, 3> mod2Homology(int genus);

/// Induced map on second mod-2 homology along phi, as a 1x1 GF(2) matrix.
Gf2Matrix h2InducedMap(int genus);

std::string renderResolution(const Resolution& r);

} // namespace tcsurf
