#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polycol/colouring.hpp"
#include "polycol/flatclass.hpp"
#include "polycol/oracle.hpp"

namespace polycol {

/// A lift of an admissible polytope symmetry to the tessellated manifold:
/// a symmetry together with an affine self-map of the copy space.
struct ColouredIsometry {
    Symmetry symmetry;
    AffineGF2Map affine;
    int orientation_sign = 1;  // sign(symmetry) * (-1)^weight(translation)

    ColouredIsometry compose(const ColouredIsometry& other) const;  // this after other
    ColouredIsometry inverse() const;
};

/// Builds the lift of a P4 symmetry (given by its K5 vertex permutation,
/// 0-based) composed with a deck translation, for the colouring whose
/// automorphism action is coordinate permutation.
ColouredIsometry coloured_isometry(const std::vector<int>& vertex_perm,
                                   const GF2Vector& translation);

/// A self-identification of the hypersurface over one cut facet: a vertex
/// permutation fixing the facet's K5 edge setwise, and a translation class
/// given by an ambient representative (well defined up to the facet colour).
struct FacetPairing {
    int facet = -1;
    std::vector<int> vertex_perm;  // 0-based images, size 5
    GF2Vector translation_rep;
};

struct MutationSpec {
    FacetPairing first, second;  // pairings of two disjoint cut facets
};

/// The two mutations studied on the symmetric colouring, and the trivial
/// cut-and-reglue control.
MutationSpec scenario_x();
MutationSpec scenario_y();
MutationSpec identity_spec();

/// The symmetric colouring of P4 (each facet coloured by its display label).
Colouring symmetric_colouring();

/// Of the two lifts of the pairing's translation class, the one that is
/// orientation-reversing on the ambient manifold.
ColouredIsometry lift_pairing(const Colouring& c, const FacetPairing& pairing);

/// The deck reflection in the hypersurface parallel to both cut facets that
/// crosses the cusp at the given vertex (1-based): translation by the colour
/// of the K4 edge disjoint from the cut facet at that vertex.
ColouredIsometry parallel_reflection(const Colouring& c, const MutationSpec& spec,
                                     int vertex);

/// A piece of a cut cusp cross-section. Short pieces sit at the vertex away
/// from both cut facets (sub-label 'a' or 'b'); long pieces at the other
/// four vertices carry no sub-label.
struct PieceLabel {
    int vertex = 0;  // 1-based K5 vertex
    char sub = 0;    // 'a' / 'b' for short pieces, 0 for long
    int sign = 1;    // +1 for the component through the base copy

    std::string str() const;
    bool operator==(const PieceLabel&) const = default;
    auto operator<=>(const PieceLabel&) const = default;
};

struct ShortPieceBoundary {
    PieceLabel label;
    int towards_first = 1;   // +1: the cut-facet boundary copy through the base copy
    int towards_second = 1;
};

/// Boundary sides of the four short cusp pieces, computed both by side
/// functionals and by union-find on the cut complex; the methods must agree.
std::vector<ShortPieceBoundary> short_cusp_boundaries(const Colouring& c,
                                                      const MutationSpec& spec);

enum class MonodromyClass { Identity, HyperellipticInvolution, Other };
const char* to_string(MonodromyClass m);

struct CuspCycle {
    std::vector<PieceLabel> pieces;      // in traversal order
    int fiber_length = 0;                // short pieces count 1, long pieces 2
    AffineGF2Map monodromy;              // preserves the starting slice coset
    MonodromyClass monodromy_class = MonodromyClass::Other;
    std::vector<GF2Vector> slice_colours;  // square colouring of the start slice
    GF2Subspace slice_subspace;
    GF2Vector slice_rep;
    /// For a translation monodromy, a square-walk cell realising it; the
    /// parities decide the class (both even: identity-isotopic, both odd:
    /// half-turn).
    std::array<long long, 2> realisation_cell = {0, 0};

    CuspCycle() : monodromy(AffineGF2Map::identity(1)), slice_subspace(1) {}
};

/// Cuts the manifold along the two hypersurfaces and re-glues by the lifted
/// pairings, following cusp-section pieces until every cycle closes.
std::vector<CuspCycle> trace_cycles(const Colouring& c, const MutationSpec& spec);

struct MutantCusp {
    CuspCycle cycle;
    WolfType type = WolfType::Other;
    /// Deck generators of the cusp section: two slice translations (z = 0)
    /// and one fiber generator. For a half-turn monodromy the fiber
    /// generator is (x,y,z) -> (-x,-y,z+period).
    std::vector<EuclideanIsometry> generators;
    std::vector<std::vector<long long>> slice_lattice;  // HNF, 2 rows of 2
    int z_period = 0;
};

struct MutantReport {
    std::vector<MutantCusp> cusps;
    Rational euler_characteristic;
    int total_fiber_length = 0;
};

MutantReport mutant_report(const Colouring& c, const MutationSpec& spec);

struct FixedStratum {
    std::vector<int> facets;  // the stratum: one facet or an adjacent pair
    GF2Vector coset_rep;      // copy class of a preserved lift
};

/// Strata of copies of codimension-1 and -2 faces whose lifts the isometry
/// preserves. An empty list certifies a free action on those strata.
std::vector<FixedStratum> fixed_point_check(const ColouredIsometry& iso,
                                            const DevelopingGraph& g);

}  // namespace polycol
