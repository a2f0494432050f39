#include "quanta/nerve.hpp"

#include <algorithm>
#include <set>

#include "quanta/error.hpp"

namespace quanta {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<DegreeIndexSet> faces)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxDegrees) {
        throw CapacityError("nerve supports at most " + std::to_string(kMaxDegrees) + " vertices");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const auto& f : faces) {
        if (f.empty()) continue;
        if (f.max_index() >= vertex_count) throw InvalidInput("face vertex out of range");
        const bool covered = std::any_of(faces.begin(), faces.end(), [&](const DegreeIndexSet& g) {
            return g != f && f.is_subset_of(g);
        });
        if (!covered) maximal_.push_back(f);
    }
}

bool SimplicialComplex::has_face(const DegreeIndexSet& face) const {
    if (face.empty()) return false;
    return std::any_of(maximal_.begin(), maximal_.end(),
                       [&](const DegreeIndexSet& m) { return face.is_subset_of(m); });
}

std::vector<DegreeIndexSet> SimplicialComplex::faces() const {
    std::set<DegreeIndexSet::Mask> masks;
    for (const auto& m : maximal_) {
        const auto full = m.mask();
        // every non-empty submask of a maximal face
        for (auto sub = full; sub != 0; sub = (sub - 1) & full) masks.insert(sub);
    }
    std::vector<DegreeIndexSet> out;
    out.reserve(masks.size());
    for (auto mask : masks) out.push_back(DegreeIndexSet::from_mask(mask));
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex compute_nerve(const Interpretation& interp) {
    const int k = interp.degree_count();
    if (k > kMaxDegrees) {
        throw CapacityError("nerve supports at most " + std::to_string(kMaxDegrees) + " degrees, got " +
                            std::to_string(k));
    }
    // A family of degrees has a common tone iff it is contained in the family
    // of degrees through some tone, so the maximal faces come from the tones.
    std::vector<DegreeIndexSet> through_tone;
    for (int tone : interp.scale().tones().members()) {
        DegreeIndexSet face;
        for (int i = 0; i < k; ++i) {
            if (interp.degree(i).contains(tone)) face.insert(i);
        }
        through_tone.push_back(face);
    }
    return SimplicialComplex(k, std::move(through_tone));
}

ComplexStats complex_stats(const SimplicialComplex& complex) {
    ComplexStats stats;
    for (const auto& face : complex.faces()) {
        const auto dim = static_cast<std::size_t>(face.size() - 1);
        if (stats.f_vector.size() <= dim) stats.f_vector.resize(dim + 1, 0);
        ++stats.f_vector[dim];
    }
    for (std::size_t d = 0; d < stats.f_vector.size(); ++d) {
        stats.euler += (d % 2 == 0 ? 1 : -1) * stats.f_vector[d];
    }
    stats.skeleton_complete = true;
    for (int a = 0; a < complex.vertex_count() && stats.skeleton_complete; ++a) {
        for (int b = a + 1; b < complex.vertex_count(); ++b) {
            if (!complex.has_face(DegreeIndexSet{a, b})) {
                stats.skeleton_complete = false;
                break;
            }
        }
    }
    stats.maximal_faces = complex.maximal_faces();
    return stats;
}

bool is_skeleton_cycle(const SimplicialComplex& complex, const std::vector<int>& vertices) {
    if (vertices.size() < 4 || vertices.front() != vertices.back()) return false;
    const std::set<int> distinct(vertices.begin(), vertices.end() - 1);
    if (distinct.size() != vertices.size() - 1) return false;
    for (int v : distinct) {
        if (v < 0 || v >= complex.vertex_count()) return false;
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (!complex.has_face(DegreeIndexSet{vertices[i], vertices[i + 1]})) return false;
    }
    return true;
}

bool is_face_cycle(const SimplicialComplex& complex, const std::vector<DegreeIndexSet>& faces,
                   int shared) {
    if (faces.size() < 3 || faces.front() != faces.back()) return false;
    for (const auto& f : faces) {
        if (!complex.has_face(f)) return false;
    }
    for (std::size_t i = 0; i + 1 < faces.size(); ++i) {
        const auto common = DegreeIndexSet::from_mask(faces[i].mask() & faces[i + 1].mask());
        if (common.size() < shared) return false;
    }
    return true;
}

std::string skeleton_dot(const SimplicialComplex& complex, int width) {
    std::string out = "graph nerve {\n";
    for (int v = 0; v < complex.vertex_count(); ++v) {
        out += "  \"" + degree_label(v, width) + "\";\n";
    }
    for (int a = 0; a < complex.vertex_count(); ++a) {
        for (int b = a + 1; b < complex.vertex_count(); ++b) {
            if (complex.has_face(DegreeIndexSet{a, b})) {
                out += "  \"" + degree_label(a, width) + "\" -- \"" + degree_label(b, width) + "\";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace quanta
