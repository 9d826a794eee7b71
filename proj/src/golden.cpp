#include "tcsurf/pipeline.hpp"

#include <stdexcept>

namespace tcsurf {

namespace {

using K = KleinElement;

const K kOne = K::identity();
const K kX{0, 1};
const K kY{1, 0};
const K kXb{0, -1};
const K kYb{-1, 0};
const K kYX{1, 1};
const K kYXb{1, -1};
const K kY2X{2, 1};
const K kY2Xb{2, -1};

PairK lft(const K& g) { return {g, kOne}; }
PairK rgt(const K& g) { return {kOne, g}; }

RingElement<K, int> bin(const K& a, const K& b) {
    RingElement<K, int> r;
    r.addTerm(a, 1);
    r.addTerm(b, -1);
    return r;
}

Gf2Vec vecByLabels(const Gf2Space& space, const std::string& sum) {
    Gf2Vec out(static_cast<std::size_t>(space.dim()), 0);
    std::size_t pos = 0;
    while (pos < sum.size()) {
        std::size_t next = sum.find('+', pos);
        if (next == std::string::npos) next = sum.size();
        const std::string label = sum.substr(pos, next - pos);
        bool found = false;
        for (int i = 0; i < space.dim(); ++i)
            if (space.labels[static_cast<std::size_t>(i)] == label) {
                out[static_cast<std::size_t>(i)] ^= 1;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("vecByLabels: unknown label " + label);
        pos = next + 1;
    }
    return out;
}

Gf2Matrix matrixByColumns(const Gf2Space& space, const std::vector<std::string>& images) {
    Gf2Matrix m(space.dim(), space.dim());
    for (int c = 0; c < space.dim(); ++c)
        m.setColumn(c, vecByLabels(space, images[static_cast<std::size_t>(c)]));
    return m;
}

} // namespace

const Gf2Space kCubeQuotientSpace{{"a", "b", "c", "d", "e", "f"}};

OmegaTable goldenOmega() {
    // The 24-term grid: shuffles of the two kappa summands, read row-major.
    const K y = kY, x = kX, yx = kYX;
    auto term = [](int sign, PairK a, PairK b, PairK c, PairK d) {
        return OmegaTerm{sign, {a, b, c, d}};
    };
    return {
        term(+1, lft(y), lft(x), rgt(y), rgt(x)),
        term(-1, lft(y), rgt(y), lft(x), rgt(x)),
        term(+1, lft(y), rgt(y), rgt(x), lft(x)),
        term(+1, rgt(y), lft(y), lft(x), rgt(x)),
        term(-1, rgt(y), lft(y), rgt(x), lft(x)),
        term(+1, rgt(y), rgt(x), lft(y), lft(x)),

        term(+1, lft(y), lft(x), rgt(yx), rgt(y)),
        term(-1, lft(y), rgt(yx), lft(x), rgt(y)),
        term(+1, lft(y), rgt(yx), rgt(y), lft(x)),
        term(+1, rgt(yx), lft(y), lft(x), rgt(y)),
        term(-1, rgt(yx), lft(y), rgt(y), lft(x)),
        term(+1, rgt(yx), rgt(y), lft(y), lft(x)),

        term(+1, lft(yx), lft(y), rgt(y), rgt(x)),
        term(-1, lft(yx), rgt(y), lft(y), rgt(x)),
        term(+1, lft(yx), rgt(y), rgt(x), lft(y)),
        term(+1, rgt(y), lft(yx), lft(y), rgt(x)),
        term(-1, rgt(y), lft(yx), rgt(x), lft(y)),
        term(+1, rgt(y), rgt(x), lft(yx), lft(y)),

        term(+1, lft(yx), lft(y), rgt(yx), rgt(y)),
        term(-1, lft(yx), rgt(yx), lft(y), rgt(y)),
        term(+1, lft(yx), rgt(yx), rgt(y), lft(y)),
        term(+1, rgt(yx), lft(yx), lft(y), rgt(y)),
        term(-1, rgt(yx), lft(yx), rgt(y), lft(y)),
        term(+1, rgt(yx), rgt(y), lft(yx), lft(y)),
    };
}

TTermTable goldenTTable() {
    // Reference rows of the evaluated fourth power, one signed pure tensor
    // per product-cycle term.
    auto row = [](int sign, RingElement<K, int> f1, RingElement<K, int> f2,
                  RingElement<K, int> f3, RingElement<K, int> f4) {
        return TTerm{sign, {std::move(f1), std::move(f2), std::move(f3), std::move(f4)}};
    };
    TTermTable t;
    t.rows = {
        row(+1, bin(kY, kOne), bin(kYX, kY), bin(kY2X, kYX), bin(kOne, kY2X)),       // T1
        row(-1, bin(kY, kOne), bin(kOne, kY), bin(kY2X, kOne), bin(kOne, kY2X)),     // T2
        row(+1, bin(kY, kOne), bin(kOne, kY), bin(kY2Xb, kOne), bin(kOne, kY2Xb)),   // T3
        row(+1, bin(kYb, kOne), bin(kOne, kYb), bin(kY2X, kOne), bin(kOne, kY2X)),   // T4
        row(-1, bin(kYb, kOne), bin(kOne, kYb), bin(kY2Xb, kOne), bin(kOne, kY2Xb)), // T5
        row(+1, bin(kYb, kOne), bin(kYXb, kYb), bin(kY2Xb, kYXb), bin(kOne, kY2Xb)), // T6
        row(+1, bin(kY, kOne), bin(kYX, kY), bin(kOne, kYX), bin(kY, kOne)),         // T7
        row(-1, bin(kY, kOne), bin(kY2Xb, kY), bin(kOne, kY2Xb), bin(kY, kOne)),     // T8
        row(+1, bin(kY, kOne), bin(kY2Xb, kY), bin(kYXb, kY2Xb), bin(kY, kYXb)),     // T9
        row(+1, bin(kYXb, kOne), bin(kY2Xb, kYXb), bin(kOne, kY2Xb), bin(kY, kOne)), // T10
        row(-1, bin(kYXb, kOne), bin(kY2Xb, kYXb), bin(kYXb, kY2Xb), bin(kY, kYXb)), // T11
        row(+1, bin(kYXb, kOne), bin(kXb, kYXb), bin(kYXb, kXb), bin(kY, kYXb)),     // T12
        row(+1, bin(kYX, kOne), bin(kX, kYX), bin(kYX, kX), bin(kYb, kYX)),          // T13
        row(-1, bin(kYX, kOne), bin(kY2X, kYX), bin(kYX, kY2X), bin(kYb, kYX)),      // T14
        row(+1, bin(kYX, kOne), bin(kY2X, kYX), bin(kOne, kY2X), bin(kYb, kOne)),    // T15
        row(+1, bin(kYb, kOne), bin(kY2X, kYb), bin(kYX, kY2X), bin(kYb, kYX)),      // T16
        row(-1, bin(kYb, kOne), bin(kY2X, kYb), bin(kOne, kY2X), bin(kYb, kOne)),    // T17
        row(+1, bin(kYb, kOne), bin(kYXb, kYb), bin(kOne, kYXb), bin(kYb, kOne)),    // T18
        row(+1, bin(kYX, kOne), bin(kX, kYX), bin(kYb, kX), bin(kOne, kYb)),         // T19
        row(-1, bin(kYX, kOne), bin(kOne, kYX), bin(kYb, kOne), bin(kOne, kYb)),     // T20
        row(+1, bin(kYX, kOne), bin(kOne, kYX), bin(kY, kOne), bin(kOne, kY)),       // T21
        row(+1, bin(kYXb, kOne), bin(kOne, kYXb), bin(kYb, kOne), bin(kOne, kYb)),   // T22
        row(-1, bin(kYXb, kOne), bin(kOne, kYXb), bin(kY, kOne), bin(kOne, kY)),     // T23
        row(+1, bin(kYXb, kOne), bin(kXb, kYXb), bin(kY, kXb), bin(kOne, kY)),       // T24
    };
    return t;
}

ActionSpec goldenJAction() {
    ActionSpec spec;
    spec.generators.emplace_back(
        "(x,1)", matrixByColumns(kJSpace, {"v", "wx+w2x", "w+w2", "w2x", "w2"}));
    spec.generators.emplace_back("(1,x)", matrixByColumns(kJSpace, {"v", "wx", "w", "w2x", "w2"}));
    spec.generators.emplace_back(
        "(y,1)", matrixByColumns(kJSpace, {"v+w+wx", "w+w2", "wx+w2x", "w2", "w2x"}));
    spec.generators.emplace_back(
        "(1,y)", matrixByColumns(kJSpace, {"v+w+w2+wx", "w+w2", "wx+w2x", "w2", "w2x"}));
    spec.generators.emplace_back(
        "(y^-1,1)", matrixByColumns(kJSpace, {"v+w+w2+wx+w2x", "w+w2", "wx+w2x", "w2", "w2x"}));
    spec.generators.emplace_back(
        "(1,y^-1)", matrixByColumns(kJSpace, {"v+w+wx+w2x", "w+w2", "wx+w2x", "w2", "w2x"}));
    return spec;
}

ActionSpec goldenCubeAction() {
    ActionSpec spec;
    spec.generators.emplace_back(
        "(x,1)", matrixByColumns(kCubeQuotientSpace, {"a+c+d+f", "e", "d+f", "c+f", "b", "f"}));
    spec.generators.emplace_back(
        "(1,x)", matrixByColumns(kCubeQuotientSpace, {"a", "e", "d", "c", "b", "f"}));
    spec.generators.emplace_back(
        "(y,1)", matrixByColumns(kCubeQuotientSpace, {"a+c+d+f", "b", "c+f", "d+f", "e", "f"}));
    return spec;
}

} // namespace tcsurf
