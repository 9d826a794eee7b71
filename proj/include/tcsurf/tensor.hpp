#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tcsurf/gf2.hpp"
#include "tcsurf/group_ring.hpp"
#include "tcsurf/groups.hpp"

namespace tcsurf {

/// Element of the k-th tensor power of the GF(2) group algebra, stored on
/// the basis of k-tuples of group elements.  Inputs built by tensorExpand
/// from augmentation-ideal factors satisfy the per-slot marginal invariant:
/// fixing all but one slot, the coefficients in the free slot sum to zero.
/// That invariant is what certifies membership in the tensor power of the
/// augmentation ideal, and it is preserved by the diagonal bi-action.
template <class G>
class TensorElement {
public:
    using Key = std::vector<G>;
    using TermMap = std::map<Key, Gf2>;

    explicit TensorElement(int rank = 0) : rank_(rank) {}

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Key& k, Gf2 c) {
        if (c.isZero()) return;
        if (static_cast<int>(k.size()) != rank_)
            throw std::invalid_argument("tensor term has wrong rank");
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        if (a.rank_ != b.rank_) throw std::invalid_argument("tensor rank mismatch");
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.addTerm(k, c);
        return r;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    int rank_;
    TermMap terms_;
};

/// Expand a pure tensor of augmentation-ideal factors onto the tuple basis.
/// Factors with nonzero augmentation are rejected: they could not be
/// zero-divisor slots.
template <class G>
TensorElement<G> tensorExpand(const std::vector<RingElement<G, Gf2>>& factors) {
    const int k = static_cast<int>(factors.size());
    for (const auto& f : factors)
        if (!f.inAugmentationIdeal())
            throw std::invalid_argument("tensorExpand: factor has nonzero augmentation");
    TensorElement<G> out(k);
    for (const auto& f : factors)
        if (f.isZero()) return out;

    std::vector<G> key(static_cast<std::size_t>(k));
    // Depth-first product over the factor supports.
    auto recurse = [&](auto&& self, int slot) -> void {
        if (slot == k) {
            out.addTerm(key, Gf2(1));
            return;
        }
        for (const auto& [g, c] : factors[static_cast<std::size_t>(slot)].terms()) {
            (void)c;
            key[static_cast<std::size_t>(slot)] = g;
            self(self, slot + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

/// Diagonal bi-action on tuples: every slot g becomes a*g*inverse(b).
template <class G>
TensorElement<G> tensorBiAct(const PairElement<G>& p, const TensorElement<G>& t) {
    const G binv = inverse(p.right);
    TensorElement<G> out(t.rank());
    for (const auto& [key, c] : t.terms()) {
        std::vector<G> moved;
        moved.reserve(key.size());
        for (const G& g : key) moved.push_back(p.left * g * binv);
        out.addTerm(moved, c);
    }
    return out;
}

/// Concatenation product, used to assemble cup-product values.
template <class G>
TensorElement<G> concatTensor(const TensorElement<G>& a, const TensorElement<G>& b) {
    TensorElement<G> out(a.rank() + b.rank());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<G> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.addTerm(key, ca * cb);
        }
    return out;
}

template <class G>
bool hasSlotMarginalZero(const TensorElement<G>& t) {
    for (int slot = 0; slot < t.rank(); ++slot) {
        std::map<std::vector<G>, Gf2> marginal;
        for (const auto& [key, c] : t.terms()) {
            std::vector<G> rest;
            rest.reserve(key.size() - 1);
            for (int i = 0; i < t.rank(); ++i)
                if (i != slot) rest.push_back(key[static_cast<std::size_t>(i)]);
            marginal[rest] += c;
        }
        for (const auto& [rest, c] : marginal) {
            (void)rest;
            if (!c.isZero()) return false;
        }
    }
    return true;
}

} // namespace tcsurf
