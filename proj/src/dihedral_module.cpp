#include "tcsurf/dihedral_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcsurf {

const Gf2Space kJSpace{{"v", "w", "wx", "w2", "w2x"}};

std::uint8_t reducedYPower(long long p) {
    switch (((p % 4) + 4) % 4) {
        case 0: return 0b001;          // 1
        case 1: return 0b010;          // y
        case 2: return 0b100;          // y^2
        default: return 0b111;         // y^3 = 1 + y + y^2
    }
}

QuotElt quotFromDihedral(const DihedralElement& g) {
    const std::uint8_t mask = reducedYPower(g.yExp);
    return {static_cast<std::uint8_t>(g.xFlag ? (mask << 3) : mask)};
}

namespace {

/// Product of two basis monomials y^k x^e * y^l x^d, already reduced.
QuotElt basisProduct(int k, int e, int l, int d) {
    const long long yPow = k + (e ? -static_cast<long long>(l) : static_cast<long long>(l));
    const std::uint8_t mask = reducedYPower(yPow);
    const int xPart = (e + d) & 1;
    return {static_cast<std::uint8_t>(xPart ? (mask << 3) : mask)};
}

} // namespace

QuotElt quotMul(QuotElt a, QuotElt b) {
    QuotElt out;
    for (int i = 0; i < 6; ++i) {
        if (!(a.bits >> i & 1)) continue;
        for (int j = 0; j < 6; ++j) {
            if (!(b.bits >> j & 1)) continue;
            out = out + basisProduct(i % 3, i / 3, j % 3, j / 3);
        }
    }
    return out;
}

Gf2 quotAugmentation(QuotElt a) {
    int count = 0;
    for (int i = 0; i < 6; ++i) count += (a.bits >> i) & 1;
    return Gf2(count);
}

Gf2Vec quotToJ(QuotElt a) {
    if (!quotAugmentation(a).isZero())
        throw std::invalid_argument("quotToJ: element has nonzero augmentation");
    const auto bit = [&](int i) { return static_cast<std::uint8_t>((a.bits >> i) & 1); };
    // Coefficients on (1, y, y^2, x, y*x, y^2*x); x shows up in v, wx, w2x.
    Gf2Vec coords(5, 0);
    coords[0] = static_cast<std::uint8_t>(bit(3) ^ bit(4) ^ bit(5));  // v
    coords[1] = bit(1);                                               // w
    coords[2] = bit(4);                                               // wx
    coords[3] = bit(2);                                               // w2
    coords[4] = bit(5);                                               // w2x
    return coords;
}

QuotElt quotFromJ(const Gf2Vec& coords) {
    if (coords.size() != 5) throw std::invalid_argument("quotFromJ: expected 5 coordinates");
    static const QuotElt basis[5] = {
        {0b001000 | 0b000001},  // v   = x + 1
        {0b000010 | 0b000001},  // w   = y + 1
        {0b010000 | 0b001000},  // wx  = y*x + x
        {0b000100 | 0b000001},  // w2  = y^2 + 1
        {0b100000 | 0b001000},  // w2x = y^2*x + x
    };
    QuotElt out;
    for (int i = 0; i < 5; ++i)
        if (coords[static_cast<std::size_t>(i)]) out = out + basis[static_cast<std::size_t>(i)];
    return out;
}

Gf2Vec reduceToJBasisElem(const DihedralElement& g) {
    Gf2Vec coords(5, 0);
    const std::uint8_t yImage = [&] {
        switch (((g.yExp % 4) + 4) % 4) {
            case 0: return 0b00;
            case 1: return 0b01;  // w
            case 2: return 0b10;  // w2
            default: return 0b11; // w + w2
        }
    }();
    if (g.xFlag == 0) {
        coords[1] = static_cast<std::uint8_t>(yImage & 1);
        coords[3] = static_cast<std::uint8_t>((yImage >> 1) & 1);
    } else {
        // y^n*x - 1 = (y^n - 1)x + (x - 1): shift w -> wx, w2 -> w2x, add v.
        coords[0] = 1;
        coords[2] = static_cast<std::uint8_t>(yImage & 1);
        coords[4] = static_cast<std::uint8_t>((yImage >> 1) & 1);
    }
    return coords;
}

Gf2Vec reduceToJ(const RingElement<DihedralElement, Gf2>& u) {
    if (!u.inAugmentationIdeal())
        throw std::invalid_argument("reduceToJ: element has nonzero augmentation");
    Gf2Vec out(5, 0);
    for (const auto& [g, c] : u.terms()) {
        (void)c;
        out = addVec(out, reduceToJBasisElem(g));
    }
    return out;
}

void DWedge::addTriple(DihedralElement g1, DihedralElement g2, DihedralElement g3, Gf2 c) {
    if (c.isZero()) return;
    if (g1.isIdentity() || g2.isIdentity() || g3.isIdentity()) return;
    Key key{g1, g2, g3};
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2]) return;
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

DWedge operator+(const DWedge& a, const DWedge& b) {
    DWedge out = a;
    for (const auto& [k, c] : b.terms_) out.addTriple(k[0], k[1], k[2], c);
    return out;
}

DWedge dwedgeBiAct(const PairElement<DihedralElement>& p, const DWedge& w) {
    const DihedralElement binv = inverse(p.right);
    const DihedralElement shift = p.left * binv;  // image of the dropped 1
    DWedge out;
    for (const auto& [key, c] : w.terms()) {
        // Each slot (g-1) maps to (a g b^-1 - 1) - (a b^-1 - 1).
        std::array<std::array<DihedralElement, 2>, 3> slot;
        std::array<int, 3> width;
        for (int s = 0; s < 3; ++s) {
            const DihedralElement moved = p.left * key[static_cast<std::size_t>(s)] * binv;
            int n = 0;
            if (!moved.isIdentity()) slot[static_cast<std::size_t>(s)][static_cast<std::size_t>(n++)] = moved;
            if (!shift.isIdentity()) slot[static_cast<std::size_t>(s)][static_cast<std::size_t>(n++)] = shift;
            width[static_cast<std::size_t>(s)] = n;
        }
        for (int i = 0; i < width[0]; ++i)
            for (int j = 0; j < width[1]; ++j)
                for (int k = 0; k < width[2]; ++k)
                    out.addTriple(slot[0][static_cast<std::size_t>(i)],
                                  slot[1][static_cast<std::size_t>(j)],
                                  slot[2][static_cast<std::size_t>(k)], c);
    }
    return out;
}

Gf2Vec dwedgeToCube(const DWedge& w) {
    Gf2Vec out(10, 0);
    for (const auto& [key, c] : w.terms()) {
        (void)c;
        const Gf2Vec img = wedge(kJSpace, reduceToJBasisElem(key[0]), reduceToJBasisElem(key[1]),
                                 reduceToJBasisElem(key[2]));
        out = addVec(out, img);
    }
    return out;
}

DWedge projectP(const TensorElement<KleinElement>& t) {
    if (t.rank() != 4) throw std::invalid_argument("projectP: rank-4 tensor expected");
    DWedge out;
    for (const auto& [key, c] : t.terms()) {
        if (projectToY(key[0]).isIdentity()) continue;
        out.addTriple(projectToDihedral(key[1]), projectToDihedral(key[2]),
                      projectToDihedral(key[3]), c);
    }
    return out;
}

std::string render(const DWedge& w) {
    if (w.isZero()) return "0";
    std::string out;
    for (const auto& [key, c] : w.terms()) {
        (void)c;
        if (!out.empty()) out += " + ";
        out += "(" + render(key[0]) + "-1)^(" + render(key[1]) + "-1)^(" + render(key[2]) + "-1)";
    }
    return out;
}

} // namespace tcsurf
