/**
 * @file pitch.hpp
 * @brief Pitch classes, pitch-class sets and affine symmetries of Z_n.
 *
 * Sets are stored as 64-bit masks, so membership and equality are O(1)
 * for every supported modulus 3 <= n <= 64.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quanta {

inline constexpr int kMinModulus = 3;
inline constexpr int kMaxModulus = 64;

/// Throws InvalidInput unless kMinModulus <= n <= kMaxModulus.
void check_modulus(int n);

class PitchClass {
public:
    PitchClass(int value, int modulus);

    int value() const { return value_; }
    int modulus() const { return modulus_; }

    friend bool operator==(const PitchClass&, const PitchClass&) = default;

private:
    int value_;
    int modulus_;
};

/// A subset of Z_n. Members are always reduced and iterate ascending.
class PitchClassSet {
public:
    using Mask = std::uint64_t;

    explicit PitchClassSet(int modulus);
    /// Residues must lie in [0, n); repeated residues collapse.
    PitchClassSet(int modulus, std::initializer_list<int> residues);
    PitchClassSet(int modulus, std::span<const int> residues);

    static PitchClassSet from_mask(int modulus, Mask mask);
    static PitchClassSet full(int modulus);

    int modulus() const { return modulus_; }
    Mask mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int residue) const;
    bool contains(const PitchClass& pc) const;
    bool is_subset_of(const PitchClassSet& other) const;

    std::vector<int> members() const;

    PitchClassSet& insert(int residue);
    PitchClassSet operator|(const PitchClassSet& other) const;
    PitchClassSet operator&(const PitchClassSet& other) const;
    PitchClassSet operator-(const PitchClassSet& other) const;

    /// "0,2,4,5" (no spaces); `sep` lets CSV output use ';'.
    std::string to_string(char sep = ',') const;

    friend bool operator==(const PitchClassSet&, const PitchClassSet&) = default;

private:
    PitchClassSet(int modulus, Mask mask, bool);
    void require_same_modulus(const PitchClassSet& other) const;

    int modulus_;
    Mask mask_ = 0;
};

/// The map x -> multiplier * x + shift on Z_n. The special affine group uses
/// multiplier +1 or -1 (stored as n-1); other units are allowed for
/// experiments with the full affine group.
class AffineSymmetry {
public:
    AffineSymmetry(int shift, int multiplier, int modulus);

    static AffineSymmetry identity(int modulus) { return {0, 1, modulus}; }
    static AffineSymmetry transposition(int shift, int modulus) { return {shift, 1, modulus}; }
    static AffineSymmetry inversion(int shift, int modulus) { return {shift, -1, modulus}; }

    /// Accepts "T6", "T6.11" and "T6.-1".
    static AffineSymmetry parse(std::string_view text, int modulus);

    int shift() const { return shift_; }
    /// Reduced residue of the multiplier; -1 is reported as n-1.
    int multiplier() const { return multiplier_; }
    int modulus() const { return modulus_; }
    /// +1 or -1 for special affine elements, 0 otherwise.
    int sign() const;
    bool is_identity() const { return shift_ == 0 && multiplier_ == 1; }

    int apply(int residue) const;
    PitchClassSet apply(const PitchClassSet& set) const;

    AffineSymmetry inverse() const;

    /// "T5.11" style, "T3" for transpositions.
    std::string to_string() const;

    /// Ordering used when listing symmetries: transpositions first, then
    /// by multiplier, then by shift.
    int sort_key() const;

    friend bool operator==(const AffineSymmetry&, const AffineSymmetry&) = default;

private:
    int shift_;
    int multiplier_;
    int modulus_;
};

/// Applies `s` to every member of `x`. Throws InvalidInput on modulus mismatch.
PitchClassSet apply_symmetry(const AffineSymmetry& s, const PitchClassSet& x);

/// outer ∘ inner: apply `inner` first.
AffineSymmetry compose(const AffineSymmetry& outer, const AffineSymmetry& inner);

/// A finite group of affine symmetries, kept in sort_key order.
class SymmetryGroup {
public:
    SymmetryGroup(int modulus, std::vector<AffineSymmetry> elements);

    int modulus() const { return modulus_; }
    const std::vector<AffineSymmetry>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const AffineSymmetry& s) const;
    bool is_trivial() const { return elements_.size() == 1 && elements_.front().is_identity(); }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const SymmetryGroup&, const SymmetryGroup&) = default;

private:
    int modulus_;
    std::vector<AffineSymmetry> elements_;
};

/// Cyclic closure {g^0, g^1, ...}.
SymmetryGroup generated_group(const AffineSymmetry& g);

/// All 2n maps x -> ±x + a.
SymmetryGroup special_affine_group(int modulus);

/// All maps x -> ux + a with u a unit of Z_n.
SymmetryGroup full_affine_group(int modulus);

/// Elements h of `group` with h(x) = x.
SymmetryGroup stabilizer(const PitchClassSet& x, const SymmetryGroup& group);
SymmetryGroup stabilizer(const PitchClassSet& x);

/// True iff the special affine stabilizer of `x` is {identity}.
bool is_rigid(const PitchClassSet& x);
bool is_rigid(const PitchClassSet& x, const SymmetryGroup& group);

}  // namespace quanta
