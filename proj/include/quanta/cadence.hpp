/**
 * @file cadence.hpp
 * @brief Cadential sets of degree indices and their minimal catalog.
 *
 * A set J of degree indices is cadential when the chords {deg_j(E) : j in J}
 * occur together as degrees of exactly one tonality E of the orbit.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "quanta/scale.hpp"

namespace quanta {

inline constexpr int kMaxDegrees = 16;

/// An ascending set of degree indices in [0, kMaxDegrees).
class DegreeIndexSet {
public:
    using Mask = std::uint32_t;

    DegreeIndexSet() = default;
    DegreeIndexSet(std::initializer_list<int> indices);
    explicit DegreeIndexSet(const std::vector<int>& indices);
    static DegreeIndexSet from_mask(Mask mask);

    Mask mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int index) const;
    bool is_subset_of(const DegreeIndexSet& other) const { return (mask_ & ~other.mask_) == 0; }
    int max_index() const;
    std::vector<int> indices() const;

    DegreeIndexSet& insert(int index);

    friend bool operator==(const DegreeIndexSet&, const DegreeIndexSet&) = default;
    /// Lexicographic on the ascending indices ({I,II} < {I,IV} < {V}).
    friend bool operator<(const DegreeIndexSet& a, const DegreeIndexSet& b);

private:
    Mask mask_ = 0;
};

/// "I", "II", ... "XVI" for index 0, 1, ... 15.
std::string roman_numeral(int index);

/// Roman numeral with a "7" suffix for width-4 interpretations.
std::string degree_label(int index, int width);

/// "II7,V7"; `sep` is ';' in CSV output. The empty set renders as "".
std::string format_degrees(const DegreeIndexSet& set, int width, char sep = ',');

/// Parses "V", "V7", "II,V", "{II7,V7}" (case-insensitive). Each index must
/// be below `degree_count`.
DegreeIndexSet parse_degrees(std::string_view text, int degree_count);

/// Throws InvalidInput if any index is >= the orbit's degree count.
bool is_cadential(const DegreeIndexSet& degrees, const TonalityOrbit& orbit);

/// Cadentiality evaluated from an arbitrary orbit member as representative.
bool is_cadential_at(const DegreeIndexSet& degrees, const TonalityOrbit& orbit,
                     std::size_t representative);

struct CadentialCatalog {
    std::vector<DegreeIndexSet> minimal_sets;
    int width = 0;
};

/// All cadential sets without a proper cadential subset, in DegreeIndexSet
/// order. Throws CapacityError above kMaxDegrees degrees.
CadentialCatalog minimal_cadential_sets(const TonalityOrbit& orbit);

}  // namespace quanta
