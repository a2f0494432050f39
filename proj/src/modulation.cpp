#include "quanta/modulation.hpp"

#include <algorithm>

#include "quanta/error.hpp"

namespace quanta {

std::vector<AffineSymmetry> enumerate_modulators(const Tonality& source, const Tonality& target) {
    if (source.modulus() != target.modulus()) throw InvalidInput("enumerate_modulators: modulus mismatch");
    std::vector<AffineSymmetry> out;
    for (const auto& g : special_affine_group(source.modulus())) {
        if (g.apply(source.scale()) == target.scale()) out.push_back(g);
    }
    return out;
}

PitchClassSet quantum_of(const AffineSymmetry& modulator, const Tonality& target,
                         const DegreeIndexSet& cadence) {
    PitchClassSet cadence_tones(target.modulus());
    for (int j : cadence.indices()) cadence_tones = cadence_tones | target.degree(j);
    PitchClassSet quantum(target.modulus());
    for (const auto& h : generated_group(modulator)) quantum = quantum | h.apply(cadence_tones);
    return quantum;
}

QuantumOutcome compute_quantum(const Modulation& mod, const QuantumOptions& options) {
    const Tonality& target = mod.target;
    if (mod.modulator.modulus() != target.modulus() || mod.source.modulus() != target.modulus()) {
        throw InvalidInput("compute_quantum: modulus mismatch");
    }
    if (mod.modulator.apply(mod.source.scale()) != target.scale()) {
        throw InvalidInput("modulator " + mod.modulator.to_string() +
                           " does not map the source scale onto the target scale");
    }
    if (!mod.cadence.empty() && mod.cadence.max_index() >= target.degree_count()) {
        throw InvalidInput("cadence index out of range");
    }

    const PitchClassSet quantum = quantum_of(mod.modulator, target, mod.cadence);
    const PitchClassSet trace = quantum & target.scale();

    const int n = target.modulus();
    const auto group = options.widen_rigidity ? full_affine_group(n) : special_affine_group(n);
    for (const auto& h : stabilizer(trace, group)) {
        if (!h.is_identity()) return NotQuantized{quantum, trace, h};
    }

    QuantumResult result{quantum, trace, {}, false, true};
    PitchClassSet pivot_tones(n);
    for (int i = 0; i < target.degree_count(); ++i) {
        if (target.degree(i).is_subset_of(quantum)) {
            result.pivots.insert(i);
            pivot_tones = pivot_tones | target.degree(i);
        }
    }
    result.covered = pivot_tones == trace;
    return result;
}

std::string to_string(Annotation a) {
    switch (a) {
        case Annotation::DiminishedScale: return "diminished-scale";
        case Annotation::TritoneSubstitution: return "tritone-substitution";
        case Annotation::Chaining: return "chaining";
    }
    return "";
}

bool is_diminished_scale(const PitchClassSet& set) {
    if (set.size() != 8) return false;
    const auto tones = set.members();
    std::vector<int> steps;
    for (std::size_t i = 0; i < tones.size(); ++i) {
        const int next = i + 1 < tones.size() ? tones[i + 1] : tones[0] + set.modulus();
        steps.push_back(next - tones[i]);
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const int a = steps[i];
        const int b = steps[(i + 1) % steps.size()];
        if (!((a == 1 && b == 2) || (a == 2 && b == 1))) return false;
    }
    return true;
}

namespace {

constexpr int kDominantIndex = 4;

std::vector<Annotation> annotate(int distance, int n, const DegreeIndexSet& cadence,
                                 const PitchClassSet& quantum) {
    std::vector<Annotation> tags;
    if (is_diminished_scale(quantum)) tags.push_back(Annotation::DiminishedScale);
    if (2 * distance == n) tags.push_back(Annotation::TritoneSubstitution);
    if (distance == 2 && cadence == DegreeIndexSet{kDominantIndex}) tags.push_back(Annotation::Chaining);
    return tags;
}

}  // namespace

std::vector<CatalogRow> modulation_catalog(const TonalityOrbit& orbit, const CatalogOptions& options) {
    const int n = orbit.modulus();
    std::vector<DegreeIndexSet> cadences =
        options.cadences ? *options.cadences : minimal_cadential_sets(orbit).minimal_sets;
    std::sort(cadences.begin(), cadences.end());

    std::vector<int> distances;
    if (options.distances) {
        distances = *options.distances;
    } else {
        for (int d = 1; d < n; ++d) distances.push_back(d);
    }
    for (int& d : distances) {
        if (d < 0 || d >= n) throw InvalidInput("distance " + std::to_string(d) + " out of range");
    }
    std::sort(distances.begin(), distances.end());
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());

    const auto& base = orbit.base();
    const Tonality source(base, options.source_transposition);
    const QuantumOptions qopts{options.widen_rigidity};

    std::vector<CatalogRow> rows;
    for (int d : distances) {
        const Tonality target(base, source.transposition() + d);
        const auto modulators = enumerate_modulators(source, target);
        for (const auto& cadence : cadences) {
            for (const auto& g : modulators) {
                const auto outcome = compute_quantum(Modulation{source, target, g, cadence}, qopts);
                const auto* q = std::get_if<QuantumResult>(&outcome);
                if (q == nullptr) continue;
                if (options.require_cover && !q->covered) continue;
                rows.push_back(CatalogRow{d, cadence, q->quantum, g, q->pivots, q->covered,
                                          annotate(d, n, cadence, q->quantum)});
            }
        }
    }
    return rows;
}

}  // namespace quanta
