#include "quanta/cadence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>

#include "quanta/error.hpp"

namespace quanta {

namespace {

void check_index(int index) {
    if (index < 0 || index >= kMaxDegrees) {
        throw InvalidInput("degree index " + std::to_string(index) + " out of range");
    }
}

void check_against(const DegreeIndexSet& set, int degree_count) {
    if (!set.empty() && set.max_index() >= degree_count) {
        throw InvalidInput("degree index " + std::to_string(set.max_index()) +
                           " out of range for " + std::to_string(degree_count) + " degrees");
    }
}

}  // namespace

DegreeIndexSet::DegreeIndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
}

DegreeIndexSet::DegreeIndexSet(const std::vector<int>& indices) {
    for (int i : indices) insert(i);
}

DegreeIndexSet DegreeIndexSet::from_mask(Mask mask) {
    if (mask >> kMaxDegrees != 0) throw InvalidInput("degree mask out of range");
    DegreeIndexSet out;
    out.mask_ = mask;
    return out;
}

int DegreeIndexSet::size() const { return std::popcount(mask_); }

bool DegreeIndexSet::contains(int index) const {
    return index >= 0 && index < kMaxDegrees && (mask_ >> index & 1U) != 0;
}

int DegreeIndexSet::max_index() const { return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_); }

std::vector<int> DegreeIndexSet::indices() const {
    std::vector<int> out;
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

DegreeIndexSet& DegreeIndexSet::insert(int index) {
    check_index(index);
    mask_ |= Mask{1} << index;
    return *this;
}

bool operator<(const DegreeIndexSet& a, const DegreeIndexSet& b) { return a.indices() < b.indices(); }

std::string roman_numeral(int index) {
    check_index(index);
    static constexpr std::array<std::pair<int, const char*>, 5> kDigits{
        {{10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}}};
    std::string out;
    int value = index + 1;
    for (const auto& [amount, digits] : kDigits) {
        for (; value >= amount; value -= amount) out += digits;
    }
    return out;
}

std::string degree_label(int index, int width) {
    return roman_numeral(index) + (width == 4 ? "7" : "");
}

std::string format_degrees(const DegreeIndexSet& set, int width, char sep) {
    std::string out;
    for (int i : set.indices()) {
        if (!out.empty()) out += sep;
        out += degree_label(i, width);
    }
    return out;
}

DegreeIndexSet parse_degrees(std::string_view text, int degree_count) {
    const auto fail = [&] { return InvalidInput("cannot parse degree set '" + std::string(text) + "'"); };
    std::string cleaned;
    for (char c : text) {
        if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
        cleaned += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    DegreeIndexSet out;
    if (cleaned.empty()) return out;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        const auto comma = std::min(cleaned.find_first_of(",;", pos), cleaned.size());
        std::string token = cleaned.substr(pos, comma - pos);
        if (!token.empty() && token.back() == '7') token.pop_back();
        int found = -1;
        for (int i = 0; i < std::min(degree_count, kMaxDegrees); ++i) {
            if (roman_numeral(i) == token) found = i;
        }
        if (found < 0) throw fail();
        out.insert(found);
        pos = comma + 1;
    }
    return out;
}

bool is_cadential_at(const DegreeIndexSet& degrees, const TonalityOrbit& orbit,
                     std::size_t representative) {
    check_against(degrees, orbit.degree_count());
    const auto& members = orbit.members();
    const Tonality& rep = members.at(representative);
    const auto idx = degrees.indices();
    for (std::size_t t = 0; t < members.size(); ++t) {
        if (t == representative) continue;
        const bool holds_all = std::all_of(idx.begin(), idx.end(), [&](int j) {
            return members[t].has_degree(rep.degree(j));
        });
        if (holds_all) return false;
    }
    return true;
}

bool is_cadential(const DegreeIndexSet& degrees, const TonalityOrbit& orbit) {
    return is_cadential_at(degrees, orbit, 0);
}

CadentialCatalog minimal_cadential_sets(const TonalityOrbit& orbit) {
    const int k = orbit.degree_count();
    if (k > kMaxDegrees) {
        throw CapacityError("cadence search supports at most " + std::to_string(kMaxDegrees) +
                            " degrees, got " + std::to_string(k));
    }
    std::vector<DegreeIndexSet> candidates;
    candidates.reserve(std::size_t{1} << k);
    for (DegreeIndexSet::Mask m = 0; m < (DegreeIndexSet::Mask{1} << k); ++m) {
        candidates.push_back(DegreeIndexSet::from_mask(m));
    }
    // By cardinality, so every proper subset is decided before its supersets.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    CadentialCatalog catalog;
    catalog.width = orbit.base().width();
    for (const auto& candidate : candidates) {
        const bool dominated = std::any_of(
            catalog.minimal_sets.begin(), catalog.minimal_sets.end(),
            [&](const DegreeIndexSet& found) { return found.is_subset_of(candidate); });
        if (!dominated && is_cadential(candidate, orbit)) catalog.minimal_sets.push_back(candidate);
    }
    std::sort(catalog.minimal_sets.begin(), catalog.minimal_sets.end());
    return catalog;
}

}  // namespace quanta
