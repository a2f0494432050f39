/**
 * @file modulation.hpp
 * @brief Modulators between tonalities, modulation quanta and the catalog
 *        of quantized modulations.
 *
 * The quantum of a modulation (g, mu) into a target tonality F is the orbit
 * of the union of F's cadence chords under the cyclic group <g>. The
 * modulation is quantized when the trace M = Q ∩ F has no symmetry other
 * than the identity; the pivots are the degrees of F contained in Q.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quanta/cadence.hpp"
#include "quanta/pitch.hpp"
#include "quanta/scale.hpp"

namespace quanta {

struct Modulation {
    Tonality source;
    Tonality target;
    AffineSymmetry modulator;
    DegreeIndexSet cadence;  ///< degree indices of the target
};

struct QuantumResult {
    PitchClassSet quantum;
    PitchClassSet trace;
    DegreeIndexSet pivots;
    bool covered = false;  ///< union of pivot chords equals the trace
    bool rigid = true;
};

/// The trace admits `symmetry`, the first non-identity stabilizer element.
struct NotQuantized {
    PitchClassSet quantum;
    PitchClassSet trace;
    AffineSymmetry symmetry;
};

using QuantumOutcome = std::variant<QuantumResult, NotQuantized>;

struct QuantumOptions {
    /// Test rigidity against x -> ux + a for every unit u instead of u = ±1.
    bool widen_rigidity = false;
};

/// Special affine maps g with g(source scale) = target scale, transpositions
/// first, each block by ascending shift.
std::vector<AffineSymmetry> enumerate_modulators(const Tonality& source, const Tonality& target);

/// Union over h in <g> of h(union of the target's cadence chords).
PitchClassSet quantum_of(const AffineSymmetry& modulator, const Tonality& target,
                         const DegreeIndexSet& cadence);

/// Throws InvalidInput if the modulator does not carry the source scale onto
/// the target scale or a cadence index is out of range.
QuantumOutcome compute_quantum(const Modulation& mod, const QuantumOptions& options = {});

enum class Annotation { DiminishedScale, TritoneSubstitution, Chaining };

std::string to_string(Annotation a);

/// 8 tones whose cyclic interval sequence alternates 1 and 2.
bool is_diminished_scale(const PitchClassSet& set);

struct CatalogRow {
    int distance = 0;
    DegreeIndexSet cadence;
    PitchClassSet quantum;
    AffineSymmetry modulator;
    DegreeIndexSet pivots;
    bool covered = false;
    std::vector<Annotation> annotations;

    friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct CatalogOptions {
    /// Defaults to every minimal cadential set of the orbit.
    std::optional<std::vector<DegreeIndexSet>> cadences;
    /// Defaults to 1 ... n-1.
    std::optional<std::vector<int>> distances;
    /// Drop rows whose pivots do not cover the trace.
    bool require_cover = false;
    bool widen_rigidity = false;
    /// Transposition of the source tonality; targets sit at source + distance.
    int source_transposition = 0;
};

/// Quantized modulations sorted by (distance, cadence, modulator order).
std::vector<CatalogRow> modulation_catalog(const TonalityOrbit& orbit, const CatalogOptions& options = {});

}  // namespace quanta
