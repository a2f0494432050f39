/**
 * @file render.hpp
 * @brief Deterministic text, CSV and JSON renderings of library results,
 *        plus the golden-catalog comparison used by `catalog --check-golden`.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quanta/cadence.hpp"
#include "quanta/modulation.hpp"
#include "quanta/nerve.hpp"

namespace quanta {

enum class Format { Text, Json, Csv, Dot };

Format parse_format(std::string_view name);

std::string render_cadences(const CadentialCatalog& catalog, Format format);

std::string render_quantum(const QuantumOutcome& outcome, int width, Format format);

/// CSV columns: tr,cadence,quantum,modulator,pivots,covered,annotations.
/// Set-valued fields use ';' between members.
std::string render_catalog(const std::vector<CatalogRow>& rows, int width, Format format);

std::string render_nerve(const ComplexStats& stats, const SimplicialComplex& complex, int width,
                         Format format);

/// Inverse of the JSON catalog rendering. Rows lacking "annotations" get
/// none. Throws InvalidInput on malformed documents.
std::vector<CatalogRow> parse_catalog_json(std::string_view json, int modulus, int degree_count);

struct GoldenDiff {
    std::vector<CatalogRow> surplus;  ///< computed but absent from the golden list
    std::vector<CatalogRow> missing;  ///< golden but not computed
    bool matches() const { return surplus.empty() && missing.empty(); }
};

/// Compares (tr, cadence, quantum, modulator, pivots, covered); annotations
/// are ignored.
GoldenDiff compare_catalog(const std::vector<CatalogRow>& computed, const std::vector<CatalogRow>& golden);

/// One line per row, e.g. "Tr=3 cadence={VII7} quantum={0,2,3} modulator=T3 pivots={II7,VII7} covered=true".
std::string describe_row(const CatalogRow& row, int width);

}  // namespace quanta
