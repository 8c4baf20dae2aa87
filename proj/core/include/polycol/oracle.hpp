#pragma once

#include <cstdint>
#include <vector>

#include "polycol/colouring.hpp"

namespace polycol {

/// The tessellation of the manifold by copies of the polytope: one vertex
/// per element of the colouring's image, one edge per (copy, facet) wall.
/// Serves as brute-force ground truth for the index formulas.
class DevelopingGraph {
public:
    explicit DevelopingGraph(Colouring colouring);

    const Colouring& colouring() const { return colouring_; }
    const std::vector<GF2Vector>& vertices() const { return vertices_; }
    std::uint64_t vertex_count() const { return vertices_.size(); }
    int degree() const { return colouring_.polytope().facet_count(); }

    int vertex_index(const GF2Vector& v) const;
    /// The copy across facet f's wall from copy g.
    int neighbour(int g, int f) const;

private:
    Colouring colouring_;
    std::vector<GF2Vector> vertices_;
};

struct ComponentCount {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> sizes;  // one entry per component, by discovery order
};

/// Components of the hypersurface over facet f: union-find over copies glued
/// across walls carrying the facet's colour or any neighbour colour.
ComponentCount hypersurface_components(const DevelopingGraph& g, int facet);

/// Two-sidedness via the tubular neighbourhood: restrict to copies reachable
/// through the facet's own wall and its neighbours' walls, then test whether
/// removing the facet-colour gluings disconnects that set.
bool two_sided_by_tube(const DevelopingGraph& g, int facet);

/// The facet's colour class separates the manifold: removing every wall
/// carrying that colour value disconnects the graph.
bool colour_class_separates_by_cut(const DevelopingGraph& g, int facet);

/// Cusp components at an ideal vertex: union-find over copies glued across
/// the walls of the facets incident to the vertex.
ComponentCount cusp_components(const DevelopingGraph& g, int w);

}  // namespace polycol
