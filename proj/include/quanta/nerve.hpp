/**
 * @file nerve.hpp
 * @brief Nerve of a degree cover: vertices are degrees, and a family of
 *        degrees spans a simplex when their chords share a tone.
 */
#pragma once

#include <string>
#include <vector>

#include "quanta/cadence.hpp"
#include "quanta/scale.hpp"

namespace quanta {

/// A simplicial complex on vertices 0..k-1 stored by its maximal faces.
class SimplicialComplex {
public:
    /// `faces` may be any generating family; only inclusion-maximal,
    /// non-empty members are kept.
    SimplicialComplex(int vertex_count, std::vector<DegreeIndexSet> faces);

    int vertex_count() const { return vertex_count_; }
    const std::vector<DegreeIndexSet>& maximal_faces() const { return maximal_; }
    bool has_face(const DegreeIndexSet& face) const;
    /// Downward closure of the maximal faces, in DegreeIndexSet order.
    std::vector<DegreeIndexSet> faces() const;

private:
    int vertex_count_;
    std::vector<DegreeIndexSet> maximal_;
};

/// Throws CapacityError for more than kMaxDegrees degrees.
SimplicialComplex compute_nerve(const Interpretation& interp);

struct ComplexStats {
    std::vector<long> f_vector;  ///< entry d counts d-dimensional faces
    long euler = 0;
    bool skeleton_complete = false;
    std::vector<DegreeIndexSet> maximal_faces;
};

ComplexStats complex_stats(const SimplicialComplex& complex);

/// True iff the sequence is closed (first == last), has at least three
/// distinct vertices, and consecutive vertices span an edge.
bool is_skeleton_cycle(const SimplicialComplex& complex, const std::vector<int>& vertices);

/// True iff consecutive faces of the closed sequence share at least
/// `shared` vertices and every listed face belongs to the complex.
bool is_face_cycle(const SimplicialComplex& complex, const std::vector<DegreeIndexSet>& faces,
                   int shared);

/// Graphviz rendering of the 1-skeleton, nodes and edges in index order.
std::string skeleton_dot(const SimplicialComplex& complex, int width);

}  // namespace quanta
