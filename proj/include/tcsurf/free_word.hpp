#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tcsurf/group_ring.hpp"

namespace tcsurf {

/// Freely reduced word in a free group, stored as runs (generator, exponent)
/// with nonzero exponents and no adjacent runs on the same generator.
struct FreeWord {
    std::vector<std::pair<int, long long>> runs;

    static FreeWord identity() { return {}; }
    bool isIdentity() const { return runs.empty(); }

    static FreeWord generator(int g, long long e = 1) {
        FreeWord w;
        if (e != 0) w.runs.push_back({g, e});
        return w;
    }

    void pushRun(int g, long long e) {
        if (e == 0) return;
        if (!runs.empty() && runs.back().first == g) {
            runs.back().second += e;
            if (runs.back().second == 0) runs.pop_back();
        } else {
            runs.push_back({g, e});
        }
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        FreeWord r = a;
        for (const auto& [g, e] : b.runs) r.pushRun(g, e);
        return r;
    }

    auto operator<=>(const FreeWord&) const = default;
};

inline FreeWord inverse(const FreeWord& a) {
    FreeWord r;
    for (auto it = a.runs.rbegin(); it != a.runs.rend(); ++it) r.runs.push_back({it->first, -it->second});
    return r;
}

/// Expand runs into single +-1 letters, e.g. a^-2 b -> a^-1, a^-1, b.
inline std::vector<std::pair<int, int>> letters(const FreeWord& w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [g, e] : w.runs) {
        const int s = e > 0 ? 1 : -1;
        for (long long i = 0; i < (e > 0 ? e : -e); ++i) out.push_back({g, s});
    }
    return out;
}

using FreeRingElement = RingElement<FreeWord, int>;

/// Fox free derivative with respect to generator `gen`:
///   d(a_i)/d(a_i) = 1,  d(a_j)/d(a_i) = 0 for j != i,
///   d(a^-1)/d(a) = -a^-1,  d(uv)/d(a) = du/da + u * dv/da.
inline FreeRingElement foxDerivative(const FreeWord& w, int gen) {
    FreeRingElement out;
    FreeWord prefix;
    for (const auto& [g, s] : letters(w)) {
        if (s == 1) {
            if (g == gen) out.addTerm(prefix, 1);
            prefix.pushRun(g, 1);
        } else {
            prefix.pushRun(g, -1);
            if (g == gen) out.addTerm(prefix, -1);
        }
    }
    return out;
}

/// Substitute each generator by the given word (identity entries delete the
/// generator), then freely reduce.
inline FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
    FreeWord out;
    for (const auto& [g, e] : w.runs) {
        const FreeWord& img = images[static_cast<std::size_t>(g)];
        const FreeWord piece = (e >= 0) ? img : inverse(img);
        const long long count = e >= 0 ? e : -e;
        for (long long i = 0; i < count; ++i)
            for (const auto& [h, f] : piece.runs) out.pushRun(h, f);
    }
    return out;
}

inline FreeRingElement substitute(const FreeRingElement& u, const std::vector<FreeWord>& images) {
    FreeRingElement out;
    for (const auto& [w, c] : u.terms()) out.addTerm(substitute(w, images), c);
    return out;
}

inline std::string renderWord(const FreeWord& w, const std::vector<std::string>& names) {
    if (w.isIdentity()) return "1";
    std::string out;
    for (const auto& [g, e] : w.runs) {
        if (!out.empty()) out += "*";
        out += renderPower(names[static_cast<std::size_t>(g)].c_str(), e);
    }
    return out;
}

inline std::string renderRing(const FreeRingElement& u, const std::vector<std::string>& names) {
    if (u.isZero()) return "0";
    std::string out;
    for (const auto& [w, c] : u.terms()) {
        int mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += renderWord(w, names);
    }
    return out;
}

} // namespace tcsurf
