#include "quanta/render.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "quanta/error.hpp"

namespace quanta {

using Json = nlohmann::ordered_json;

namespace {

Json degree_array(const DegreeIndexSet& set, int width) {
    Json out = Json::array();
    for (int i : set.indices()) out.push_back(degree_label(i, width));
    return out;
}

Json tone_array(const PitchClassSet& set) {
    Json out = Json::array();
    for (int r : set.members()) out.push_back(r);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string braced(const std::string& body) { return "{" + body + "}"; }

std::string annotations_text(const std::vector<Annotation>& tags, char sep) {
    std::string out;
    for (auto tag : tags) {
        if (!out.empty()) out += sep;
        out += to_string(tag);
    }
    return out;
}

std::string pad_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

void unsupported(Format format, const char* what) {
    (void)format;
    throw InvalidInput(std::string("format not supported for ") + what);
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "dot") return Format::Dot;
    throw InvalidInput("unknown format '" + std::string(name) + "'");
}

std::string render_cadences(const CadentialCatalog& catalog, Format format) {
    switch (format) {
        case Format::Text: {
            std::string out;
            for (const auto& set : catalog.minimal_sets) out += braced(format_degrees(set, catalog.width)) + "\n";
            return out;
        }
        case Format::Json: {
            Json out = Json::array();
            for (const auto& set : catalog.minimal_sets) out.push_back(degree_array(set, catalog.width));
            return dump(out);
        }
        case Format::Csv: {
            std::string out = "cadence\n";
            for (const auto& set : catalog.minimal_sets) out += format_degrees(set, catalog.width, ';') + "\n";
            return out;
        }
        case Format::Dot: unsupported(format, "cadences");
    }
    return {};
}

std::string render_quantum(const QuantumOutcome& outcome, int width, Format format) {
    const auto* q = std::get_if<QuantumResult>(&outcome);
    const auto* nq = std::get_if<NotQuantized>(&outcome);
    switch (format) {
        case Format::Text: {
            if (q != nullptr) {
                return "quantized: true\nquantum: " + q->quantum.to_string() + "\ntrace: " + q->trace.to_string() +
                       "\npivots: " + format_degrees(q->pivots, width) +
                       "\ncovered: " + (q->covered ? "true" : "false") + "\n";
            }
            return "quantized: false\nquantum: " + nq->quantum.to_string() + "\ntrace: " + nq->trace.to_string() +
                   "\nsymmetry: " + nq->symmetry.to_string() + "\n";
        }
        case Format::Json: {
            Json out;
            out["quantized"] = q != nullptr;
            if (q != nullptr) {
                out["quantum"] = tone_array(q->quantum);
                out["trace"] = tone_array(q->trace);
                out["pivots"] = degree_array(q->pivots, width);
                out["covered"] = q->covered;
            } else {
                out["quantum"] = tone_array(nq->quantum);
                out["trace"] = tone_array(nq->trace);
                out["symmetry"] = nq->symmetry.to_string();
            }
            return dump(out);
        }
        case Format::Csv: {
            if (q != nullptr) {
                return "quantized,quantum,trace,pivots,covered,symmetry\ntrue," + q->quantum.to_string(';') + "," +
                       q->trace.to_string(';') + "," + format_degrees(q->pivots, width, ';') + "," +
                       (q->covered ? "true" : "false") + ",\n";
            }
            return "quantized,quantum,trace,pivots,covered,symmetry\nfalse," + nq->quantum.to_string(';') + "," +
                   nq->trace.to_string(';') + ",,," + nq->symmetry.to_string() + "\n";
        }
        case Format::Dot: unsupported(format, "quantum");
    }
    return {};
}

std::string render_catalog(const std::vector<CatalogRow>& rows, int width, Format format) {
    switch (format) {
        case Format::Text: {
            std::vector<std::vector<std::string>> cells{
                {"Tr", "Cadence", "Quantum", "Modulator", "Pivots", "Covered", "Annotations"}};
            for (const auto& r : rows) {
                cells.push_back({std::to_string(r.distance), braced(format_degrees(r.cadence, width)),
                                 braced(r.quantum.to_string()), r.modulator.to_string(),
                                 braced(format_degrees(r.pivots, width)) + (r.covered ? "" : "*"),
                                 r.covered ? "yes" : "no", annotations_text(r.annotations, ',')});
            }
            return pad_table(cells);
        }
        case Format::Json: {
            Json out = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["tr"] = r.distance;
                row["cadence"] = degree_array(r.cadence, width);
                row["quantum"] = tone_array(r.quantum);
                row["modulator"] = r.modulator.to_string();
                row["pivots"] = degree_array(r.pivots, width);
                row["covered"] = r.covered;
                Json tags = Json::array();
                for (auto tag : r.annotations) tags.push_back(to_string(tag));
                row["annotations"] = tags;
                out.push_back(row);
            }
            return dump(out);
        }
        case Format::Csv: {
            std::string out = "tr,cadence,quantum,modulator,pivots,covered,annotations\n";
            for (const auto& r : rows) {
                out += std::to_string(r.distance) + "," + format_degrees(r.cadence, width, ';') + "," +
                       r.quantum.to_string(';') + "," + r.modulator.to_string() + "," +
                       format_degrees(r.pivots, width, ';') + "," + (r.covered ? "true" : "false") + "," +
                       annotations_text(r.annotations, ';') + "\n";
            }
            return out;
        }
        case Format::Dot: unsupported(format, "catalog");
    }
    return {};
}

std::string render_nerve(const ComplexStats& stats, const SimplicialComplex& complex, int width,
                         Format format) {
    switch (format) {
        case Format::Text: {
            std::string fv;
            for (long c : stats.f_vector) fv += (fv.empty() ? "" : ",") + std::to_string(c);
            std::string out = "f-vector: " + fv + "\neuler: " + std::to_string(stats.euler) +
                              "\nskeleton-complete: " + (stats.skeleton_complete ? "true" : "false") +
                              "\nmaximal-faces:\n";
            for (const auto& f : stats.maximal_faces) out += "  " + braced(format_degrees(f, width)) + "\n";
            return out;
        }
        case Format::Json: {
            Json out;
            out["f_vector"] = stats.f_vector;
            out["euler"] = stats.euler;
            out["skeleton_complete"] = stats.skeleton_complete;
            Json faces = Json::array();
            for (const auto& f : stats.maximal_faces) faces.push_back(degree_array(f, width));
            out["maximal_faces"] = faces;
            return dump(out);
        }
        case Format::Csv: {
            std::string out = "maximal_face,dimension\n";
            for (const auto& f : stats.maximal_faces) {
                out += format_degrees(f, width, ';') + "," + std::to_string(f.size() - 1) + "\n";
            }
            return out;
        }
        case Format::Dot: return skeleton_dot(complex, width);
    }
    return {};
}

std::vector<CatalogRow> parse_catalog_json(std::string_view json, int modulus, int degree_count) {
    std::vector<CatalogRow> rows;
    try {
        const Json doc = Json::parse(json);
        if (!doc.is_array()) throw InvalidInput("catalog JSON must be an array");
        const auto degrees = [&](const Json& arr) {
            std::string joined;
            for (const auto& label : arr) joined += (joined.empty() ? "" : ",") + label.get<std::string>();
            return parse_degrees(joined, degree_count);
        };
        for (const auto& item : doc) {
            PitchClassSet quantum(modulus);
            for (const auto& r : item.at("quantum")) quantum.insert(r.get<int>());
            std::vector<Annotation> tags;
            if (item.contains("annotations")) {
                for (const auto& t : item.at("annotations")) {
                    const auto name = t.get<std::string>();
                    if (name == "diminished-scale") tags.push_back(Annotation::DiminishedScale);
                    else if (name == "tritone-substitution") tags.push_back(Annotation::TritoneSubstitution);
                    else if (name == "chaining") tags.push_back(Annotation::Chaining);
                    else throw InvalidInput("unknown annotation '" + name + "'");
                }
            }
            rows.push_back(CatalogRow{item.at("tr").get<int>(), degrees(item.at("cadence")), quantum,
                                      AffineSymmetry::parse(item.at("modulator").get<std::string>(), modulus),
                                      degrees(item.at("pivots")), item.at("covered").get<bool>(), tags});
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed catalog JSON: ") + e.what());
    }
    return rows;
}

namespace {

auto row_key(const CatalogRow& r) {
    return std::make_tuple(r.distance, r.cadence.mask(), r.quantum.mask(), r.modulator.sort_key(),
                           r.pivots.mask(), r.covered);
}

}  // namespace

GoldenDiff compare_catalog(const std::vector<CatalogRow>& computed, const std::vector<CatalogRow>& golden) {
    GoldenDiff diff;
    const auto absent = [](const CatalogRow& row, const std::vector<CatalogRow>& pool) {
        return std::none_of(pool.begin(), pool.end(),
                            [&](const CatalogRow& other) { return row_key(other) == row_key(row); });
    };
    for (const auto& r : computed) {
        if (absent(r, golden)) diff.surplus.push_back(r);
    }
    for (const auto& r : golden) {
        if (absent(r, computed)) diff.missing.push_back(r);
    }
    return diff;
}

std::string describe_row(const CatalogRow& row, int width) {
    return "Tr=" + std::to_string(row.distance) + " cadence=" + braced(format_degrees(row.cadence, width)) +
           " quantum=" + braced(row.quantum.to_string()) + " modulator=" + row.modulator.to_string() +
           " pivots=" + braced(format_degrees(row.pivots, width)) +
           " covered=" + (row.covered ? "true" : "false");
}

}  // namespace quanta
