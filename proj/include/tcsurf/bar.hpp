#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tcsurf/groups.hpp"

namespace tcsurf {

/// Basis symbol [a_1|...|a_n] of the (unnormalized) bar resolution.
/// Identity entries are allowed; the degree is the length.
template <class G>
using BarTuple = std::vector<G>;

/// Integer chain in the bar resolution: a finitely supported map from
/// (coefficient element, basis tuple) to nonzero integers, representing
/// sums of terms n * g * [a_1|...|a_n].  Signs are kept exact so that
/// twisted-coefficient cycle checks see them.
template <class G>
class BarChain {
public:
    using Key = std::pair<G, BarTuple<G>>;
    using TermMap = std::map<Key, long long>;

    explicit BarChain(int degree = 0) : degree_(degree) {}

    static BarChain ofTuple(const BarTuple<G>& t, long long coeff = 1,
                            const G& elem = G::identity()) {
        BarChain c(static_cast<int>(t.size()));
        c.addTerm(elem, t, coeff);
        return c;
    }

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const G& elem, const BarTuple<G>& t, long long c) {
        if (c == 0) return;
        if (static_cast<int>(t.size()) != degree_)
            throw std::invalid_argument("bar chain term has wrong degree");
        auto [it, fresh] = terms_.try_emplace(Key{elem, t}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend BarChain operator+(const BarChain& a, const BarChain& b) {
        if (a.degree_ != b.degree_) throw std::invalid_argument("bar chain degree mismatch");
        BarChain r = a;
        for (const auto& [k, c] : b.terms_) r.addTerm(k.first, k.second, c);
        return r;
    }
    BarChain operator-() const {
        BarChain r(degree_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    BarChain scaled(long long s) const {
        BarChain r(degree_);
        if (s != 0)
            for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }
    /// Left action of a group element on the whole chain.
    BarChain actedBy(const G& g) const {
        BarChain r(degree_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{g * k.first, k.second}, c);
        return r;
    }

    friend bool operator==(const BarChain& a, const BarChain& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    TermMap terms_;
};

/// Bar differential:
///   d[a_1|...|a_n] = a_1*[a_2|...|a_n]
///                  + sum_i (-1)^i [a_1|...|a_i a_{i+1}|...|a_n]
///                  + (-1)^n [a_1|...|a_{n-1}]
/// extended linearly over coefficients from the group ring.
template <class G>
BarChain<G> boundary(const BarChain<G>& c) {
    const int n = c.degree();
    if (n < 1) throw std::invalid_argument("boundary: degree 0 chain has no boundary");
    BarChain<G> out(n - 1);
    for (const auto& [key, coeff] : c.terms()) {
        const G& elem = key.first;
        const BarTuple<G>& t = key.second;

        BarTuple<G> head(t.begin() + 1, t.end());
        out.addTerm(elem * t.front(), head, coeff);

        for (int i = 1; i <= n - 1; ++i) {
            BarTuple<G> mid;
            mid.reserve(static_cast<std::size_t>(n - 1));
            for (int j = 0; j < n; ++j) {
                if (j == i - 1) {
                    mid.push_back(t[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j + 1)]);
                    ++j;
                } else {
                    mid.push_back(t[static_cast<std::size_t>(j)]);
                }
            }
            out.addTerm(elem, mid, (i % 2 == 0) ? coeff : -coeff);
        }

        BarTuple<G> tail(t.begin(), t.end() - 1);
        out.addTerm(elem, tail, (n % 2 == 0) ? coeff : -coeff);
    }
    return out;
}

/// One summand of the Alexander-Whitney diagonal: the right tuple carries
/// the group coefficient a_1*...*a_i.
template <class G>
struct AwSummand {
    BarTuple<G> left;
    G rightCoeff;
    BarTuple<G> right;
};

/// Alexander-Whitney diagonal of a basis tuple (n+1 summands, all signs +1):
///   [a_1|...|a_n] -> sum_i [a_1|...|a_i] (x) a_1...a_i [a_{i+1}|...|a_n].
template <class G>
std::vector<AwSummand<G>> awDiagonal(const BarTuple<G>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<AwSummand<G>> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    G prefix = G::identity();
    for (int i = 0; i <= n; ++i) {
        AwSummand<G> s;
        s.left.assign(t.begin(), t.begin() + i);
        s.rightCoeff = prefix;
        s.right.assign(t.begin() + i, t.end());
        out.push_back(std::move(s));
        if (i < n) prefix = prefix * t[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Eilenberg-Zilber shuffles of [a_1|..|a_i] (x) [b_1|..|b_j]: one signed
/// tuple over the product group per (i,j)-shuffle.  Left entries embed as
/// (a,1) and right entries as (1,b); the shuffle chooses the positions of
/// the left block, enumerated in lexicographic order, and the sign is the
/// parity of the number of transpositions needed to unshuffle.
template <class G>
std::vector<std::pair<int, BarTuple<PairElement<G>>>> ezShuffles(const BarTuple<G>& left,
                                                                 const BarTuple<G>& right) {
    const int i = static_cast<int>(left.size());
    const int j = static_cast<int>(right.size());
    const int n = i + j;

    std::vector<std::pair<int, BarTuple<PairElement<G>>>> out;
    std::vector<int> pos(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) pos[static_cast<std::size_t>(k)] = k;

    auto emit = [&]() {
        int inversions = 0;
        for (int k = 0; k < i; ++k) inversions += pos[static_cast<std::size_t>(k)] - k;
        BarTuple<PairElement<G>> tuple(static_cast<std::size_t>(n),
                                       PairElement<G>::identity());
        std::size_t li = 0;
        std::vector<bool> taken(static_cast<std::size_t>(n), false);
        for (int k = 0; k < i; ++k) {
            tuple[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])] =
                PairElement<G>{left[li], G::identity()};
            taken[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])] = true;
            ++li;
        }
        std::size_t ri = 0;
        for (int k = 0; k < n; ++k)
            if (!taken[static_cast<std::size_t>(k)])
                tuple[static_cast<std::size_t>(k)] =
                    PairElement<G>{G::identity(), right[ri++]};
        out.emplace_back((inversions % 2 == 0) ? 1 : -1, std::move(tuple));
    };

    if (i == 0) {
        emit();
        return out;
    }
    // Enumerate i-subsets of {0..n-1} in lexicographic order.
    while (true) {
        emit();
        int k = i - 1;
        while (k >= 0 && pos[static_cast<std::size_t>(k)] == n - i + k) --k;
        if (k < 0) break;
        ++pos[static_cast<std::size_t>(k)];
        for (int m = k + 1; m < i; ++m)
            pos[static_cast<std::size_t>(m)] = pos[static_cast<std::size_t>(m - 1)] + 1;
    }
    return out;
}

template <class G>
BarChain<PairElement<G>> ezMap(const BarTuple<G>& left, const BarTuple<G>& right) {
    BarChain<PairElement<G>> out(static_cast<int>(left.size() + right.size()));
    for (const auto& [sign, tuple] : ezShuffles(left, right))
        out.addTerm(PairElement<G>::identity(), tuple, sign);
    return out;
}

/// Bilinear extension of the shuffle map to chains; coefficient elements
/// combine into the product group.
template <class G>
BarChain<PairElement<G>> ezMapChains(const BarChain<G>& a, const BarChain<G>& b) {
    BarChain<PairElement<G>> out(a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const PairElement<G> elem{ka.first, kb.first};
            for (const auto& [sign, tuple] : ezShuffles(ka.second, kb.second))
                out.addTerm(elem, tuple, sign * ca * cb);
        }
    return out;
}

enum class CoeffModule { TrivialGf2, OrientationZtilde };

/// True iff the boundary of the chain dies after tensoring the coefficients
/// over the group with the given module: trivial GF(2) coefficients forget
/// the coefficient element and reduce mod 2, the orientation module
/// transports it to a sign and demands exact integer cancellation.
template <class G>
bool cycleCheck(const BarChain<G>& c, CoeffModule m) {
    if (c.degree() == 0) return true;
    const BarChain<G> b = boundary(c);
    std::map<BarTuple<G>, long long> reduced;
    for (const auto& [key, coeff] : b.terms()) {
        const long long transported =
            (m == CoeffModule::OrientationZtilde) ? coeff * orientationSign(key.first) : coeff;
        reduced[key.second] += transported;
    }
    for (const auto& [t, coeff] : reduced) {
        (void)t;
        if (m == CoeffModule::TrivialGf2) {
            if (coeff % 2 != 0) return false;
        } else {
            if (coeff != 0) return false;
        }
    }
    return true;
}

template <class G>
std::string render(const BarTuple<G>& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += "|";
        out += render(t[i]);
    }
    out += "]";
    return out;
}

template <class G>
std::string render(const BarChain<G>& c) {
    if (c.isZero()) return "0";
    // Sort by tuple rendering first so golden comparisons are stable.
    std::map<std::pair<std::string, std::string>, long long> sorted;
    for (const auto& [key, coeff] : c.terms())
        sorted[{render(key.second), render(key.first)}] = coeff;
    std::string out;
    for (const auto& [k, coeff] : sorted) {
        if (!out.empty()) out += " ";
        out += (coeff < 0) ? "-" : "+";
        long long mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag) + "*";
        if (k.second != "1") out += "(" + k.second + ")*";
        out += k.first;
    }
    return out;
}

} // namespace tcsurf
