#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polycol/gf2.hpp"

namespace polycol {

/// A symmetry of a combinatorial polytope: a permutation of its facets
/// together with an orientation sign. For P4 the underlying permutation of
/// the K5 vertex labels {1..5} is carried along (0-based internally).
struct Symmetry {
    std::vector<int> facet_perm;
    int sign = 1;
    std::vector<int> vertex_perm;  // empty for boxes

    Symmetry compose(const Symmetry& other) const;  // this after other
    bool operator==(const Symmetry& other) const = default;
};

/// Facet-level combinatorics of a right-angled polytope: adjacency, simple
/// vertices, ideal vertices and ideal edges (as facet index sets), and the
/// full symmetry group.
class CombinatorialPolytope {
public:
    CombinatorialPolytope(std::string name, int dim,
                          std::vector<std::string> facet_ids,
                          std::vector<std::string> facet_labels);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facet_ids_.size()); }
    const std::string& facet_id(int f) const { return facet_ids_.at(static_cast<std::size_t>(f)); }
    const std::string& facet_label(int f) const { return facet_labels_.at(static_cast<std::size_t>(f)); }
    /// Index for a facet id, or -1.
    int facet_index(const std::string& id) const;

    bool adjacent(int f, int g) const;
    const std::vector<std::vector<int>>& simple_vertices() const { return simple_vertices_; }
    const std::vector<std::vector<int>>& ideal_vertices() const { return ideal_vertices_; }
    const std::vector<std::vector<int>>& ideal_edges() const { return ideal_edges_; }
    const std::vector<Symmetry>& symmetries() const { return symmetries_; }

    /// All facets adjacent to f, in increasing index order.
    std::vector<int> dart(int f) const;

    // Construction helpers; used by the builders below.
    void set_adjacent(int f, int g);
    void add_simple_vertex(std::vector<int> facets);
    void add_ideal_vertex(std::vector<int> facets);
    void add_ideal_edge(std::vector<int> facets);
    void set_symmetries(std::vector<Symmetry> symmetries);

private:
    std::string name_;
    int dim_;
    std::vector<std::string> facet_ids_;
    std::vector<std::string> facet_labels_;
    std::vector<std::vector<bool>> adjacency_;
    std::vector<std::vector<int>> simple_vertices_;
    std::vector<std::vector<int>> ideal_vertices_;
    std::vector<std::vector<int>> ideal_edges_;
    std::vector<Symmetry> symmetries_;
};

using PolytopePtr = std::shared_ptr<const CombinatorialPolytope>;

/// Euclidean d-box, 2 <= d <= 6. Facet ids x0,x1,y0,y1,... in axis order;
/// symmetry group is the signed permutations of the axes.
PolytopePtr build_box(int d);

/// The right-angled hyperbolic 4-polytope with 10 facets, encoded through
/// the edges of K5. Facet ids are the two vertex digits ascending ("45"),
/// labels are the bit strings with zeros at those vertices ("11100").
/// Ideal vertex k (0-based) is the K4 omitting K5 vertex k+1.
PolytopePtr build_p4();

PolytopePtr build_polytope(const std::string& name);  // "box2".."box6", "P4"

/// K5 edge of a P4 facet, as 1-based vertex labels i < j.
std::pair<int, int> p4_edge(int facet);
/// Facet index of the K5 edge {i, j} (1-based labels).
int p4_facet(int i, int j);

struct VertexFigure {
    PolytopePtr cube;                 // a 3-box
    std::vector<int> face_to_facet;   // cube face index -> P4 facet index
};

/// The cubical vertex figure of ideal vertex w of P4. Opposite cube faces
/// correspond to disjoint edges of the K4 at w.
VertexFigure vertex_figure(const CombinatorialPolytope& p4, int w);

/// The functional sum_{j != i} x_j cutting out the subspace of the ideal
/// vertex labelled i (1-based) of P4.
GF2Vector cusp_hyperplane_equation(int i);

/// The symmetry of P4 induced by a permutation of the K5 vertex labels
/// (vertex_perm[v] = image of v, 0-based).
Symmetry p4_symmetry(const std::vector<int>& vertex_perm);

}  // namespace polycol
