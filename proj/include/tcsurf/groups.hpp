#pragma once

#include <compare>
#include <string>

namespace tcsurf {

/// Element y^b x^a of the Klein bottle group <x,y | yxy=x>.
///
/// The normal form puts the y-power first.  Moving a power of x past a
/// power of y flips the sign of the y-exponent (x*y = y^-1*x), which gives
/// the multiplication law below.
struct KleinElement {
    long long yExp = 0;
    long long xExp = 0;

    static KleinElement identity() { return {}; }
    bool isIdentity() const { return yExp == 0 && xExp == 0; }

    friend KleinElement operator*(const KleinElement& a, const KleinElement& b) {
        const long long flip = (a.xExp % 2 == 0) ? 1 : -1;
        return {a.yExp + flip * b.yExp, a.xExp + b.xExp};
    }
    auto operator<=>(const KleinElement&) const = default;
};

inline KleinElement inverse(const KleinElement& a) {
    // Solve (y^b x^a)(y^d x^c) = 1 with the multiplication law.
    const long long flip = (a.xExp % 2 == 0) ? -1 : 1;
    return {flip * a.yExp, -a.xExp};
}

/// Element y^n x^e (e in {0,1}) of the infinite dihedral group, the
/// quotient of the Klein group by x^2.
struct DihedralElement {
    long long yExp = 0;
    int xFlag = 0;

    static DihedralElement identity() { return {}; }
    bool isIdentity() const { return yExp == 0 && xFlag == 0; }

    friend DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
        const long long flip = (a.xFlag == 0) ? 1 : -1;
        return {a.yExp + flip * b.yExp, (a.xFlag + b.xFlag) & 1};
    }
    auto operator<=>(const DihedralElement&) const = default;
};

inline DihedralElement inverse(const DihedralElement& a) {
    // Elements with xFlag = 1 are involutions.
    if (a.xFlag != 0) return a;
    return {-a.yExp, 0};
}

/// The order-two quotient <y | y^2 = 1> obtained by also killing x.
struct CyclicTwoElement {
    int flag = 0;

    static CyclicTwoElement identity() { return {}; }
    bool isIdentity() const { return flag == 0; }

    friend CyclicTwoElement operator*(CyclicTwoElement a, CyclicTwoElement b) {
        return {(a.flag + b.flag) & 1};
    }
    auto operator<=>(const CyclicTwoElement&) const = default;
};

inline CyclicTwoElement inverse(const CyclicTwoElement& a) { return a; }

/// Direct product element (left, right), multiplied componentwise.
template <class G>
struct PairElement {
    G left{};
    G right{};

    static PairElement identity() { return {G::identity(), G::identity()}; }
    bool isIdentity() const { return left.isIdentity() && right.isIdentity(); }

    friend PairElement operator*(const PairElement& a, const PairElement& b) {
        return {a.left * b.left, a.right * b.right};
    }
    auto operator<=>(const PairElement&) const = default;
};

template <class G>
PairElement<G> inverse(const PairElement<G>& a) {
    return {inverse(a.left), inverse(a.right)};
}

inline DihedralElement projectToDihedral(const KleinElement& a) {
    return {a.yExp, static_cast<int>(((a.xExp % 2) + 2) % 2)};
}

inline CyclicTwoElement projectToY(const KleinElement& a) {
    return {static_cast<int>(((a.yExp % 2) + 2) % 2)};
}

inline PairElement<DihedralElement> projectToDihedral(const PairElement<KleinElement>& a) {
    return {projectToDihedral(a.left), projectToDihedral(a.right)};
}

/// Sign of the action on the rank-one orientation module: powers of x act
/// by -1, powers of y act trivially.
inline int orientationSign(const KleinElement& a) { return (a.xExp % 2 == 0) ? 1 : -1; }

inline int orientationSign(const PairElement<KleinElement>& a) {
    return orientationSign(a.left) * orientationSign(a.right);
}

// ---------------------------------------------------------------------------
// Canonical text rendering.  Elements print as "y^-1*x^3", "y*x", "1"; sums
// elsewhere sort terms by the element ordering (yExp, then xExp).

inline std::string renderPower(const char* sym, long long e) {
    if (e == 1) return sym;
    return std::string(sym) + "^" + std::to_string(e);
}

inline std::string render(const KleinElement& g) {
    if (g.isIdentity()) return "1";
    std::string out;
    if (g.yExp != 0) out += renderPower("y", g.yExp);
    if (g.xExp != 0) {
        if (!out.empty()) out += "*";
        out += renderPower("x", g.xExp);
    }
    return out;
}

inline std::string render(const DihedralElement& g) {
    if (g.isIdentity()) return "1";
    std::string out;
    if (g.yExp != 0) out += renderPower("y", g.yExp);
    if (g.xFlag != 0) {
        if (!out.empty()) out += "*";
        out += "x";
    }
    return out;
}

inline std::string render(const CyclicTwoElement& g) { return g.flag ? "y" : "1"; }

template <class G>
std::string render(const PairElement<G>& g) {
    return "(" + render(g.left) + "," + render(g.right) + ")";
}

} // namespace tcsurf
