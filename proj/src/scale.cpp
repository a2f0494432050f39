#include "quanta/scale.hpp"

#include <algorithm>

#include "quanta/error.hpp"

namespace quanta {

Scale::Scale(PitchClassSet tones) : tones_(std::move(tones)), members_(tones_.members()) {
    if (tones_.empty()) throw InvalidInput("scale must contain at least one tone");
}

Scale Scale::major(int modulus) {
    if (modulus != 12) throw InvalidInput("the major scale preset is defined for n = 12 only");
    return Scale(PitchClassSet(12, {0, 2, 4, 5, 7, 9, 11}));
}

Interpretation::Interpretation(Scale scale, int width) : scale_(std::move(scale)), width_(width) {
    if (width < 1) throw InvalidInput("interpretation width must be at least 1");
    const int k = scale_.size();
    degrees_.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        PitchClassSet chord(scale_.modulus());
        for (int j = 0; j < width; ++j) chord.insert(scale_.tone((i + 2 * j) % k));
        degrees_.push_back(chord);
    }
}

const PitchClassSet& Interpretation::degree(int index) const {
    if (index < 0 || index >= degree_count()) {
        throw InvalidInput("degree index " + std::to_string(index) + " out of range");
    }
    return degrees_[static_cast<std::size_t>(index)];
}

Interpretation build_interpretation(const Scale& scale, int width) { return Interpretation(scale, width); }

Tonality::Tonality(const Interpretation& base, int transposition)
    : transposition_(0), scale_(base.modulus()) {
    const auto t = AffineSymmetry::transposition(transposition, base.modulus());
    transposition_ = t.shift();
    scale_ = t.apply(base.scale().tones());
    degrees_.reserve(base.degrees().size());
    for (const auto& chord : base.degrees()) degrees_.push_back(t.apply(chord));
}

const PitchClassSet& Tonality::degree(int index) const {
    if (index < 0 || index >= degree_count()) {
        throw InvalidInput("degree index " + std::to_string(index) + " out of range");
    }
    return degrees_[static_cast<std::size_t>(index)];
}

bool Tonality::has_degree(const PitchClassSet& chord) const {
    return std::find(degrees_.begin(), degrees_.end(), chord) != degrees_.end();
}

TonalityOrbit::TonalityOrbit(Interpretation base) : base_(std::move(base)) {
    for (int a = 0; a < base_.modulus(); ++a) {
        Tonality candidate(base_, a);
        const bool seen = std::any_of(members_.begin(), members_.end(), [&](const Tonality& t) {
            return t.scale() == candidate.scale();
        });
        if (!seen) members_.push_back(std::move(candidate));
    }
}

const Tonality& TonalityOrbit::at_transposition(int a) const {
    const auto target = AffineSymmetry::transposition(a, modulus()).apply(base_.scale().tones());
    for (const auto& t : members_) {
        if (t.scale() == target) return t;
    }
    throw InvalidInput("no orbit member for transposition " + std::to_string(a));
}

TonalityOrbit tonality_orbit(const Interpretation& base) { return TonalityOrbit(base); }

std::vector<int> tonalities_containing(const PitchClassSet& chord, const TonalityOrbit& orbit) {
    if (chord.modulus() != orbit.modulus()) throw InvalidInput("tonalities_containing: modulus mismatch");
    std::vector<int> out;
    for (const auto& t : orbit.members()) {
        if (t.has_degree(chord)) out.push_back(t.transposition());
    }
    return out;
}

}  // namespace quanta
