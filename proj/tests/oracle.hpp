// Brute-force reference computations on std::set<int>. Deliberately shares no
// code with the library so the unit tests compare two independent routes.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Tones = std::set<int>;

inline int mod(int x, int n) { return ((x % n) + n) % n; }

/// x -> sign * x + shift
inline Tones map(int shift, int sign, const Tones& x, int n) {
    Tones out;
    for (int t : x) out.insert(mod(sign * t + shift, n));
    return out;
}

inline std::vector<std::pair<int, int>> all_symmetries(int n) {
    std::vector<std::pair<int, int>> out;
    for (int sign : {1, -1})
        for (int a = 0; a < n; ++a) out.emplace_back(a, sign);
    return out;
}

inline std::vector<std::pair<int, int>> fixing(const Tones& x, int n) {
    std::vector<std::pair<int, int>> out;
    for (auto [a, v] : all_symmetries(n))
        if (map(a, v, x, n) == x) out.emplace_back(a, v);
    return out;
}

inline std::vector<Tones> degrees(const std::vector<int>& scale, int width) {
    const int k = static_cast<int>(scale.size());
    std::vector<Tones> out;
    for (int i = 0; i < k; ++i) {
        Tones chord;
        for (int j = 0; j < width; ++j) chord.insert(scale[(i + 2 * j) % k]);
        out.push_back(chord);
    }
    return out;
}

/// Degree lists of T^a(base) for every a, one per distinct scale.
inline std::vector<std::pair<int, std::vector<Tones>>> orbit(const std::vector<int>& scale, int width, int n) {
    std::vector<std::pair<int, std::vector<Tones>>> out;
    std::set<Tones> seen;
    const auto base = degrees(scale, width);
    const Tones base_scale(scale.begin(), scale.end());
    for (int a = 0; a < n; ++a) {
        if (!seen.insert(map(a, 1, base_scale, n)).second) continue;
        std::vector<Tones> chords;
        for (const auto& c : base) chords.push_back(map(a, 1, c, n));
        out.emplace_back(a, chords);
    }
    return out;
}

inline bool cadential(const std::vector<int>& indices, const std::vector<int>& scale, int width, int n) {
    const auto orb = orbit(scale, width, n);
    int hits = 0;
    for (const auto& [a, chords] : orb) {
        bool all = true;
        for (int j : indices)
            all = all && std::find(chords.begin(), chords.end(), orb[0].second[j]) != chords.end();
        hits += all ? 1 : 0;
    }
    return hits == 1;
}

/// Repeated application of (shift, sign) until the set stops growing.
inline Tones closure(int shift, int sign, Tones x, int n) {
    for (;;) {
        Tones next = x;
        for (int t : map(shift, sign, x, n)) next.insert(t);
        if (next == x) return x;
        x = next;
    }
}

inline Tones intersect(const Tones& a, const Tones& b) {
    Tones out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace oracle
