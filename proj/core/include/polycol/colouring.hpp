#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycol/gf2.hpp"
#include "polycol/polytope.hpp"

namespace polycol {

/// An assignment of GF(2)^s colours to the facets of a polytope.
class Colouring {
public:
    Colouring(PolytopePtr polytope, int s, std::vector<GF2Vector> colours);

    const CombinatorialPolytope& polytope() const { return *polytope_; }
    PolytopePtr polytope_ptr() const { return polytope_; }
    int s() const { return s_; }
    const GF2Vector& colour(int f) const { return colours_.at(static_cast<std::size_t>(f)); }
    const std::vector<GF2Vector>& colours() const { return colours_; }

    const GF2Subspace& image() const { return image_; }
    int image_dim() const { return image_.dim(); }
    /// Number of copies of the polytope tessellating the associated manifold.
    std::uint64_t copy_count() const { return std::uint64_t{1} << image_dim(); }

    /// The colouring obtained by relabelling facets along the symmetry:
    /// facet sym(f) of the result carries the colour of facet f.
    Colouring relabelled(const Symmetry& sym) const;

    bool operator==(const Colouring& other) const {
        return s_ == other.s_ && colours_ == other.colours_ &&
               polytope_->name() == other.polytope_->name();
    }

private:
    PolytopePtr polytope_;
    int s_;
    std::vector<GF2Vector> colours_;
    GF2Subspace image_;
};

struct ProperVerdict {
    bool proper = true;
    std::vector<int> bad_simple_vertices;  // indices into simple_vertices()
    std::vector<int> bad_ideal_edges;      // indices into ideal_edges()
};

/// Properness: facet colours at each simple vertex have rank dim, and at
/// each ideal edge rank dim-1 (boxes have no ideal structure to check).
ProperVerdict check_proper(const Colouring& c);

/// A functional evaluating to 1 on every facet colour, if one exists.
/// Existence is equivalent to orientability of the colouring's manifold.
std::optional<GF2Vector> orientability_witness(const Colouring& c);

struct HypersurfaceReport {
    int facet = -1;
    GF2Subspace W;  // span of the facet colour and its neighbours' colours
    std::uint64_t lift_count = 0;
    bool two_sided = false;
    /// The facet's colour class cuts the manifold into two pieces. "Other
    /// colours" means the colours of facets carrying a different value.
    bool colour_class_separates = false;

    HypersurfaceReport() : W(1) {}
};

/// Totally geodesic hypersurface data for one facet. Indices are taken
/// inside the image of the colouring (the manifold has 2^image_dim copies).
HypersurfaceReport hypersurface_report(const Colouring& c, int facet);

struct InducedFacetColouring {
    std::vector<int> facets;         // dart of the facet, ascending
    std::vector<GF2Vector> colours;  // in quotient coordinates, dim s-1
    GF2Subspace image;

    InducedFacetColouring() : image(1) {}
};

/// The colouring induced on the hypersurface of a facet: neighbour colours
/// in the quotient by the facet's own colour.
InducedFacetColouring induced_facet_colouring(const Colouring& c, int facet);

struct VertexFigureColouring {
    Colouring cube;                  // 3-box colouring, same ambient dimension
    std::vector<int> face_to_facet;  // cube face -> source facet
    GF2Subspace vertex_span;         // span of the colours at the ideal vertex
    std::uint64_t cusp_count = 0;    // index of vertex_span inside image
};

/// The cube colouring carried by the vertex figure of an ideal vertex,
/// with the cusp count it determines.
VertexFigureColouring induced_vertex_figure_colouring(const Colouring& c, int w);

struct HypersurfaceCuspSection {
    int vertex = -1;               // ideal vertex whose cusp the hypersurface meets
    std::uint64_t count = 0;       // cusp components of the hypersurface there
    std::uint64_t squares_each = 0;
    Colouring slice;               // square colouring of the cross-section torus
};

/// Cusp cross-sections of the totally geodesic hypersurface over a P4 facet:
/// one entry per ideal vertex whose incident facets include the given one.
std::vector<HypersurfaceCuspSection> hypersurface_cusp_sections(const Colouring& c,
                                                                int facet);

struct AdmissibleSymmetry {
    Symmetry symmetry;
    AffineGF2Map colour_action;  // linear automorphism realising the relabelling
};

/// All polytope symmetries whose induced permutation of colours extends to
/// a linear automorphism of the colour space, with one extension each.
std::vector<AdmissibleSymmetry> admissible_symmetries(const Colouring& c);

struct Rational {
    long long num = 0;
    long long den = 1;
    bool operator==(const Rational&) const = default;
};

/// Euler characteristic of the hyperbolic 4-manifold: copy count / 16.
Rational euler_characteristic_p4(const Colouring& c);

/// Column-style reduced echelon form of a colour list under change of basis
/// of the target space: scanning facets in order, each new independent
/// colour becomes the next unit vector. One canonical matrix per GL-orbit.
std::vector<GF2Vector> rref_colour_matrix(const std::vector<GF2Vector>& colours, int s);

/// Canonical representative of the colouring's class under both change of
/// basis and the polytope's symmetry group: the lexicographically least
/// echelon matrix over the symmetry orbit.
std::vector<GF2Vector> canonical_colour_matrix(const Colouring& c);

struct EnumerationOptions {
    bool orientable_only = false;
    std::uint64_t max_classes = 100000;
};

struct EnumerationResult {
    std::vector<Colouring> classes;  // canonical representatives
    bool capped = false;
};

/// All proper colourings of the polytope into GF(2)^s, one canonical
/// representative per equivalence class. Stops (and flags) at the cap.
EnumerationResult enumerate_proper_colourings(PolytopePtr polytope, int s,
                                              const EnumerationOptions& options = {});

}  // namespace polycol
