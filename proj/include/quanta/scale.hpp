/**
 * @file scale.hpp
 * @brief Scales, stacked-third interpretations and their transposition orbits.
 */
#pragma once

#include <vector>

#include "quanta/pitch.hpp"

namespace quanta {

class Scale {
public:
    /// Throws InvalidInput for an empty tone set.
    explicit Scale(PitchClassSet tones);

    static Scale major(int modulus = 12);

    const PitchClassSet& tones() const { return tones_; }
    int modulus() const { return tones_.modulus(); }
    int size() const { return tones_.size(); }
    /// Tone x_i of the ascending indexing.
    int tone(int index) const { return members_[static_cast<std::size_t>(index)]; }

    friend bool operator==(const Scale& a, const Scale& b) { return a.tones_ == b.tones_; }

private:
    PitchClassSet tones_;
    std::vector<int> members_;
};

/// The cover of a k-tone scale by k chords, degree i = {x_(i+2j mod k) : j < width}.
class Interpretation {
public:
    Interpretation(Scale scale, int width);

    const Scale& scale() const { return scale_; }
    int width() const { return width_; }
    int degree_count() const { return static_cast<int>(degrees_.size()); }
    const PitchClassSet& degree(int index) const;
    const std::vector<PitchClassSet>& degrees() const { return degrees_; }
    int modulus() const { return scale_.modulus(); }

private:
    Scale scale_;
    int width_;
    std::vector<PitchClassSet> degrees_;
};

Interpretation build_interpretation(const Scale& scale, int width);

/// A transposed copy T^a of a base interpretation. Degree labels are carried
/// over from the base, so degree 0 stays on the tonic of every key.
class Tonality {
public:
    Tonality(const Interpretation& base, int transposition);

    int transposition() const { return transposition_; }
    int modulus() const { return scale_.modulus(); }
    const PitchClassSet& scale() const { return scale_; }
    const PitchClassSet& degree(int index) const;
    const std::vector<PitchClassSet>& degrees() const { return degrees_; }
    int degree_count() const { return static_cast<int>(degrees_.size()); }
    /// True iff `chord` equals one of this tonality's degrees.
    bool has_degree(const PitchClassSet& chord) const;

private:
    int transposition_;
    PitchClassSet scale_;
    std::vector<PitchClassSet> degrees_;
};

/// One tonality per distinct transposed scale, in ascending transposition.
class TonalityOrbit {
public:
    explicit TonalityOrbit(Interpretation base);

    const Interpretation& base() const { return base_; }
    const std::vector<Tonality>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    int modulus() const { return base_.modulus(); }
    int degree_count() const { return base_.degree_count(); }
    /// Orbit member whose scale equals T^a(base scale).
    const Tonality& at_transposition(int a) const;

private:
    Interpretation base_;
    std::vector<Tonality> members_;
};

TonalityOrbit tonality_orbit(const Interpretation& base);

/// Transpositions (orbit representatives) whose tonality has `chord` as a degree.
std::vector<int> tonalities_containing(const PitchClassSet& chord, const TonalityOrbit& orbit);

}  // namespace quanta
