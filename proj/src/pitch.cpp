#include "quanta/pitch.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <optional>

#include "quanta/error.hpp"

namespace quanta {

namespace {

int reduce(long long value, int n) {
    const long long r = value % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

PitchClassSet::Mask bit(int residue) { return PitchClassSet::Mask{1} << residue; }

PitchClassSet::Mask full_mask(int n) {
    return n == 64 ? ~PitchClassSet::Mask{0} : (PitchClassSet::Mask{1} << n) - 1;
}

void require_same(int a, int b, const char* what) {
    if (a != b) {
        throw InvalidInput(std::string(what) + ": modulus mismatch (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
    }
}

std::optional<long long> parse_int(std::string_view text) {
    long long value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
    return value;
}

}  // namespace

void check_modulus(int n) {
    if (n < kMinModulus || n > kMaxModulus) {
        throw InvalidInput("modulus " + std::to_string(n) + " outside [" +
                           std::to_string(kMinModulus) + ", " + std::to_string(kMaxModulus) + "]");
    }
}

// ---------------------------------------------------------------------------
// PitchClass

PitchClass::PitchClass(int value, int modulus) : value_(value), modulus_(modulus) {
    check_modulus(modulus);
    if (value < 0 || value >= modulus) {
        throw InvalidInput("pitch class " + std::to_string(value) + " not reduced mod " +
                           std::to_string(modulus));
    }
}

// ---------------------------------------------------------------------------
// PitchClassSet

PitchClassSet::PitchClassSet(int modulus) : modulus_(modulus) { check_modulus(modulus); }

PitchClassSet::PitchClassSet(int modulus, Mask mask, bool) : modulus_(modulus), mask_(mask) {}

PitchClassSet::PitchClassSet(int modulus, std::initializer_list<int> residues)
    : PitchClassSet(modulus, std::span<const int>(residues.begin(), residues.size())) {}

PitchClassSet::PitchClassSet(int modulus, std::span<const int> residues) : PitchClassSet(modulus) {
    for (int r : residues) insert(r);
}

PitchClassSet PitchClassSet::from_mask(int modulus, Mask mask) {
    check_modulus(modulus);
    if ((mask & ~full_mask(modulus)) != 0) {
        throw InvalidInput("mask has bits outside Z_" + std::to_string(modulus));
    }
    return PitchClassSet(modulus, mask, true);
}

PitchClassSet PitchClassSet::full(int modulus) {
    check_modulus(modulus);
    return PitchClassSet(modulus, full_mask(modulus), true);
}

int PitchClassSet::size() const { return std::popcount(mask_); }

bool PitchClassSet::contains(int residue) const {
    return residue >= 0 && residue < modulus_ && (mask_ & bit(residue)) != 0;
}

bool PitchClassSet::contains(const PitchClass& pc) const {
    return pc.modulus() == modulus_ && contains(pc.value());
}

bool PitchClassSet::is_subset_of(const PitchClassSet& other) const {
    require_same_modulus(other);
    return (mask_ & ~other.mask_) == 0;
}

std::vector<int> PitchClassSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

PitchClassSet& PitchClassSet::insert(int residue) {
    if (residue < 0 || residue >= modulus_) {
        throw InvalidInput("pitch class " + std::to_string(residue) + " not reduced mod " +
                           std::to_string(modulus_));
    }
    mask_ |= bit(residue);
    return *this;
}

PitchClassSet PitchClassSet::operator|(const PitchClassSet& other) const {
    require_same_modulus(other);
    return PitchClassSet(modulus_, mask_ | other.mask_, true);
}

PitchClassSet PitchClassSet::operator&(const PitchClassSet& other) const {
    require_same_modulus(other);
    return PitchClassSet(modulus_, mask_ & other.mask_, true);
}

PitchClassSet PitchClassSet::operator-(const PitchClassSet& other) const {
    require_same_modulus(other);
    return PitchClassSet(modulus_, mask_ & ~other.mask_, true);
}

std::string PitchClassSet::to_string(char sep) const {
    std::string out;
    for (int r : members()) {
        if (!out.empty()) out += sep;
        out += std::to_string(r);
    }
    return out;
}

void PitchClassSet::require_same_modulus(const PitchClassSet& other) const {
    require_same(modulus_, other.modulus_, "pitch-class set");
}

// ---------------------------------------------------------------------------
// AffineSymmetry

AffineSymmetry::AffineSymmetry(int shift, int multiplier, int modulus)
    : shift_(0), multiplier_(1), modulus_(modulus) {
    check_modulus(modulus);
    shift_ = reduce(shift, modulus);
    multiplier_ = reduce(multiplier, modulus);
    if (std::gcd(multiplier_, modulus) != 1) {
        throw InvalidInput("multiplier " + std::to_string(multiplier) + " is not a unit mod " +
                           std::to_string(modulus));
    }
}

AffineSymmetry AffineSymmetry::parse(std::string_view text, int modulus) {
    const auto fail = [&] { return InvalidInput("cannot parse symmetry '" + std::string(text) + "'"); };
    if (text.size() < 2 || (text[0] != 'T' && text[0] != 't')) throw fail();
    std::string_view body = text.substr(1);
    std::string_view mult_text;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        mult_text = body.substr(dot + 1);
        body = body.substr(0, dot);
    }
    const auto shift = parse_int(body);
    if (!shift || *shift < 0) throw fail();
    long long mult = 1;
    if (!mult_text.empty() || text.back() == '.') {
        const auto m = parse_int(mult_text);
        if (!m) throw fail();
        mult = *m;
    }
    check_modulus(modulus);
    if (*shift >= modulus) throw fail();
    return AffineSymmetry(static_cast<int>(*shift), static_cast<int>(reduce(mult, modulus)), modulus);
}

int AffineSymmetry::sign() const {
    if (multiplier_ == 1) return 1;
    if (multiplier_ == modulus_ - 1) return -1;
    return 0;
}

int AffineSymmetry::apply(int residue) const {
    return reduce(static_cast<long long>(multiplier_) * residue + shift_, modulus_);
}

PitchClassSet AffineSymmetry::apply(const PitchClassSet& set) const {
    require_same(modulus_, set.modulus(), "apply_symmetry");
    PitchClassSet::Mask out = 0;
    for (int r : set.members()) out |= bit(apply(r));
    return PitchClassSet::from_mask(modulus_, out);
}

AffineSymmetry AffineSymmetry::inverse() const {
    int inv = 1;
    while (reduce(static_cast<long long>(inv) * multiplier_, modulus_) != 1) ++inv;
    return AffineSymmetry(reduce(-static_cast<long long>(inv) * shift_, modulus_), inv, modulus_);
}

std::string AffineSymmetry::to_string() const {
    std::string out = "T" + std::to_string(shift_);
    if (multiplier_ != 1) out += "." + std::to_string(multiplier_);
    return out;
}

int AffineSymmetry::sort_key() const {
    const int rank = multiplier_ == 1 ? 0 : multiplier_ == modulus_ - 1 ? 1 : 1 + multiplier_;
    return rank * modulus_ + shift_;
}

PitchClassSet apply_symmetry(const AffineSymmetry& s, const PitchClassSet& x) { return s.apply(x); }

AffineSymmetry compose(const AffineSymmetry& outer, const AffineSymmetry& inner) {
    require_same(outer.modulus(), inner.modulus(), "compose");
    const int n = outer.modulus();
    const long long mult = static_cast<long long>(outer.multiplier()) * inner.multiplier();
    const long long shift = static_cast<long long>(outer.multiplier()) * inner.shift() + outer.shift();
    return AffineSymmetry(reduce(shift, n), reduce(mult, n), n);
}

// ---------------------------------------------------------------------------
// SymmetryGroup

SymmetryGroup::SymmetryGroup(int modulus, std::vector<AffineSymmetry> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
    check_modulus(modulus);
    for (const auto& e : elements_) require_same(modulus_, e.modulus(), "symmetry group");
    std::sort(elements_.begin(), elements_.end(),
              [](const auto& a, const auto& b) { return a.sort_key() < b.sort_key(); });
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SymmetryGroup::contains(const AffineSymmetry& s) const {
    return std::find(elements_.begin(), elements_.end(), s) != elements_.end();
}

SymmetryGroup generated_group(const AffineSymmetry& g) {
    std::vector<AffineSymmetry> elements{AffineSymmetry::identity(g.modulus())};
    for (AffineSymmetry power = g; !power.is_identity(); power = compose(g, power)) {
        elements.push_back(power);
    }
    return SymmetryGroup(g.modulus(), std::move(elements));
}

SymmetryGroup special_affine_group(int modulus) {
    check_modulus(modulus);
    std::vector<AffineSymmetry> elements;
    for (int mult : {1, -1}) {
        for (int a = 0; a < modulus; ++a) elements.emplace_back(a, mult, modulus);
    }
    return SymmetryGroup(modulus, std::move(elements));
}

SymmetryGroup full_affine_group(int modulus) {
    check_modulus(modulus);
    std::vector<AffineSymmetry> elements;
    for (int u = 1; u < modulus; ++u) {
        if (std::gcd(u, modulus) != 1) continue;
        for (int a = 0; a < modulus; ++a) elements.emplace_back(a, u, modulus);
    }
    return SymmetryGroup(modulus, std::move(elements));
}

SymmetryGroup stabilizer(const PitchClassSet& x, const SymmetryGroup& group) {
    require_same(x.modulus(), group.modulus(), "stabilizer");
    std::vector<AffineSymmetry> fixing;
    for (const auto& h : group) {
        if (h.apply(x) == x) fixing.push_back(h);
    }
    return SymmetryGroup(group.modulus(), std::move(fixing));
}

SymmetryGroup stabilizer(const PitchClassSet& x) {
    return stabilizer(x, special_affine_group(x.modulus()));
}

bool is_rigid(const PitchClassSet& x, const SymmetryGroup& group) {
    return stabilizer(x, group).is_trivial();
}

bool is_rigid(const PitchClassSet& x) { return is_rigid(x, special_affine_group(x.modulus())); }

}  // namespace quanta
