#include "polycol/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polycol {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

ComponentCount components_under(const DevelopingGraph& g,
                                const std::vector<GF2Vector>& generators) {
    UnionFind uf(g.vertices().size());
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        for (const auto& t : generators) {
            int u = g.vertex_index(g.vertices()[v] + t);
            uf.unite(v, static_cast<std::size_t>(u));
        }
    ComponentCount out;
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        std::size_t r = uf.find(v);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            out.sizes.push_back(1);
        } else {
            ++out.sizes[static_cast<std::size_t>(it - roots.begin())];
        }
    }
    out.count = roots.size();
    return out;
}

std::vector<GF2Vector> dart_colours(const DevelopingGraph& g, int facet) {
    std::vector<GF2Vector> out;
    for (int f : g.colouring().polytope().dart(facet))
        out.push_back(g.colouring().colour(f));
    return out;
}

}  // namespace

DevelopingGraph::DevelopingGraph(Colouring colouring) : colouring_(std::move(colouring)) {
    if (!check_proper(colouring_).proper)
        throw std::invalid_argument("developing graph requires a proper colouring");
    vertices_ = colouring_.image().elements();
}

int DevelopingGraph::vertex_index(const GF2Vector& v) const {
    GF2Vector r = colouring_.image().reduce(v);
    if (!r.is_zero())
        throw std::invalid_argument("vector lies outside the colouring's image");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == v) return static_cast<int>(i);
    throw std::logic_error("image element missing from vertex list");
}

int DevelopingGraph::neighbour(int g, int f) const {
    return vertex_index(vertices_.at(static_cast<std::size_t>(g)) + colouring_.colour(f));
}

ComponentCount hypersurface_components(const DevelopingGraph& g, int facet) {
    std::vector<GF2Vector> gens = dart_colours(g, facet);
    gens.push_back(g.colouring().colour(facet));
    return components_under(g, gens);
}

bool two_sided_by_tube(const DevelopingGraph& g, int facet) {
    const GF2Vector fc = g.colouring().colour(facet);
    std::vector<GF2Vector> tube = dart_colours(g, facet);
    tube.push_back(fc);
    // Copies meeting the tubular neighbourhood of the lift through copy 0.
    UnionFind reach(g.vertices().size());
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        for (const auto& t : tube)
            reach.unite(v, static_cast<std::size_t>(g.vertex_index(g.vertices()[v] + t)));
    std::size_t root = reach.find(0);

    // Within the tube, glue only across neighbour walls; if the facet-colour
    // crossings are needed for connectivity, the lift is one-sided.
    UnionFind sides(g.vertices().size());
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        if (reach.find(v) != root) continue;
        for (const auto& t : dart_colours(g, facet))
            sides.unite(v, static_cast<std::size_t>(g.vertex_index(g.vertices()[v] + t)));
    }
    std::size_t pieces = 0;
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        if (reach.find(v) != root) continue;
        std::size_t r = sides.find(v);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
            roots.push_back(r);
            ++pieces;
        }
    }
    return pieces > 1;
}

bool colour_class_separates_by_cut(const DevelopingGraph& g, int facet) {
    const GF2Vector fc = g.colouring().colour(facet);
    std::vector<GF2Vector> gens;
    for (int f = 0; f < g.colouring().polytope().facet_count(); ++f)
        if (g.colouring().colour(f) != fc) gens.push_back(g.colouring().colour(f));
    return components_under(g, gens).count > 1;
}

ComponentCount cusp_components(const DevelopingGraph& g, int w) {
    std::vector<GF2Vector> gens;
    for (int f : g.colouring().polytope().ideal_vertices().at(static_cast<std::size_t>(w)))
        gens.push_back(g.colouring().colour(f));
    return components_under(g, gens);
}

}  // namespace polycol
