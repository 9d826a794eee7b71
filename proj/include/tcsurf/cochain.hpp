#pragma once

#include <functional>
#include <stdexcept>

#include "tcsurf/bar.hpp"
#include "tcsurf/group_ring.hpp"
#include "tcsurf/tensor.hpp"

namespace tcsurf {

enum class TargetModule { AugmentationIdealZ, TensorPowerGf2 };

/// Rule-based cochain: a module morphism out of the degree-n piece of the
/// bar resolution, determined by its values on basis tuples and extended
/// linearly over the group ring.  Rules are closed-form functions because
/// the tuple basis is infinite.
template <class G, class V>
struct BarCochain {
    int degree = 0;
    TargetModule target = TargetModule::TensorPowerGf2;
    V zeroValue{};
    std::function<V(const BarTuple<G>&)> rule;

    V operator()(const BarTuple<G>& t) const { return rule(t); }
};

inline long long normalizeScale(long long s, Gf2) { return s & 1; }

template <class G>
TensorElement<G> scaledValue(const TensorElement<G>& v, long long s) {
    if (s % 2 == 0) return TensorElement<G>(v.rank());
    return v;
}

template <class G>
RingElement<G, int> scaledValue(const RingElement<G, int>& v, long long s) {
    return v.scaled(static_cast<int>(s));
}

template <class G>
TensorElement<G> actOnValue(const PairElement<G>& g, const TensorElement<G>& v) {
    return tensorBiAct(g, v);
}

template <class G, class C>
RingElement<G, C> actOnValue(const PairElement<G>& g, const RingElement<G, C>& v) {
    return biAct(g, v);
}

/// Module-linear extension of a cochain to a chain: sum of
/// coeff * (elem . rule(tuple)) over the support.
template <class G, class V>
V applyToChain(const BarCochain<G, V>& alpha, const BarChain<G>& c) {
    if (c.degree() != alpha.degree)
        throw std::invalid_argument("applyToChain: degree mismatch");
    V acc = alpha.zeroValue;
    for (const auto& [key, coeff] : c.terms())
        acc = acc + scaledValue(actOnValue(key.first, alpha.rule(key.second)), coeff);
    return acc;
}

/// Coboundary with the convention d_n(alpha) = (-1)^(n+1) alpha . boundary.
template <class G, class V>
BarCochain<G, V> coboundary(const BarCochain<G, V>& alpha) {
    BarCochain<G, V> out;
    out.degree = alpha.degree + 1;
    out.target = alpha.target;
    out.zeroValue = alpha.zeroValue;
    const long long sign = (alpha.degree % 2 == 0) ? -1 : 1;
    out.rule = [alpha, sign](const BarTuple<G>& t) {
        return scaledValue(applyToChain(alpha, boundary(BarChain<G>::ofTuple(t))), sign);
    };
    return out;
}

/// Cup product of tensor-valued cochains via the Alexander-Whitney
/// diagonal.  Only the (i, n-i) component of the diagonal contributes:
///   (alpha u beta)[a_1|..|a_n]
///     = (-1)^(i(n-i)) alpha([a_1|..|a_i]) (x) (a_1..a_i).beta([a_{i+1}|..|a_n]).
template <class G, class H>
BarCochain<G, TensorElement<H>> cup(const BarCochain<G, TensorElement<H>>& alpha,
                                    const BarCochain<G, TensorElement<H>>& beta) {
    BarCochain<G, TensorElement<H>> out;
    out.degree = alpha.degree + beta.degree;
    out.target = TargetModule::TensorPowerGf2;
    out.zeroValue = TensorElement<H>(alpha.zeroValue.rank() + beta.zeroValue.rank());
    const long long sign = ((alpha.degree * beta.degree) % 2 == 0) ? 1 : -1;
    out.rule = [alpha, beta, sign](const BarTuple<G>& t) {
        const auto split = t.begin() + alpha.degree;
        BarTuple<G> left(t.begin(), split);
        BarTuple<G> right(split, t.end());
        G prefix = G::identity();
        for (const G& g : left) prefix = prefix * g;
        TensorElement<H> value =
            concatTensor(alpha.rule(left), actOnValue(prefix, beta.rule(right)));
        return scaledValue(value, sign);
    };
    return out;
}

/// Evaluation pairing against a chain with coefficients in a module.  Only
/// trivial GF(2) coefficients are supported for tensor-valued cochains;
/// there the coefficient element transports through the diagonal action and
/// everything reduces mod 2.
template <class G, class H>
TensorElement<H> evaluate(const BarCochain<G, TensorElement<H>>& alpha, const BarChain<G>& c,
                          CoeffModule m) {
    if (m != CoeffModule::TrivialGf2 || alpha.target != TargetModule::TensorPowerGf2)
        throw std::invalid_argument("evaluate: target-module mismatch");
    return applyToChain(alpha, c);
}

} // namespace tcsurf
