#pragma once

#include <stdexcept>

#include "tcsurf/cochain.hpp"

namespace tcsurf {

/// The canonical degree-one cocycle on the product group:
///   nu([(a,b)]) = a*inverse(b) - 1,
/// an augmentation-ideal element.  It vanishes on the diagonal, which is
/// what makes its class a zero-divisor.
template <class G>
RingElement<G, int> nuCocycle(const BarTuple<PairElement<G>>& t) {
    if (t.size() != 1) throw std::invalid_argument("nuCocycle: expected a degree-1 tuple");
    const G u = t[0].left * inverse(t[0].right);
    RingElement<G, int> r;
    r.addTerm(u, 1);
    r.addTerm(G::identity(), -1);
    return r;
}

template <class G>
BarCochain<PairElement<G>, RingElement<G, int>> nuIntCochain() {
    BarCochain<PairElement<G>, RingElement<G, int>> c;
    c.degree = 1;
    c.target = TargetModule::AugmentationIdealZ;
    c.zeroValue = RingElement<G, int>::zero();
    c.rule = [](const BarTuple<PairElement<G>>& t) { return nuCocycle<G>(t); };
    return c;
}

/// The same cocycle with values in the rank-one GF(2) tensor power.
template <class G>
BarCochain<PairElement<G>, TensorElement<G>> nuGf2Cochain() {
    BarCochain<PairElement<G>, TensorElement<G>> c;
    c.degree = 1;
    c.target = TargetModule::TensorPowerGf2;
    c.zeroValue = TensorElement<G>(1);
    c.rule = [](const BarTuple<PairElement<G>>& t) {
        return tensorExpand<G>({toGf2(nuCocycle<G>(t))});
    };
    return c;
}

/// Closed form of the n-th power of nu on [(a_1,b_1)|...|(a_n,b_n)]:
/// slot i is
///   (a_1...a_{i-1}) (u_i - 1) (inverse(b_{i-1})...inverse(b_1)),
/// with u_i = a_i*inverse(b_i); over GF(2) the global sign disappears.
template <class G>
TensorElement<G> nuPower(int n, const BarTuple<PairElement<G>>& t) {
    if (n < 1) throw std::invalid_argument("nuPower: n must be positive");
    if (static_cast<int>(t.size()) != n)
        throw std::invalid_argument("nuPower: tuple degree does not match n");
    std::vector<RingElement<G, Gf2>> slots;
    slots.reserve(static_cast<std::size_t>(n));
    PairElement<G> prefix = PairElement<G>::identity();
    for (int i = 0; i < n; ++i) {
        const auto& pair = t[static_cast<std::size_t>(i)];
        const G u = pair.left * inverse(pair.right);
        RingElement<G, Gf2> slot;
        slot.addTerm(u, Gf2(1));
        slot.addTerm(G::identity(), Gf2(1));
        slots.push_back(biAct(prefix, slot));
        prefix = prefix * pair;
    }
    return tensorExpand(slots);
}

template <class G>
BarCochain<PairElement<G>, TensorElement<G>> nuPowerCochain(int n) {
    BarCochain<PairElement<G>, TensorElement<G>> c;
    c.degree = n;
    c.target = TargetModule::TensorPowerGf2;
    c.zeroValue = TensorElement<G>(n);
    c.rule = [n](const BarTuple<PairElement<G>>& t) { return nuPower<G>(n, t); };
    return c;
}

} // namespace tcsurf
