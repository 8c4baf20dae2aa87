#pragma once

#include <cstdint>
#include <vector>

#include "polycol/colouring.hpp"

namespace polycol {

enum class WolfType { Torus, G2, Other };
enum class CubeClass { ThreeTorus, HyperellipticBundle, Other };

const char* to_string(WolfType t);
const char* to_string(CubeClass c);

/// An isometry of Euclidean d-space of the form x_a -> signs[a]*x_a + trans[a].
/// All deck transformations arising from box reflection walks have this shape.
struct EuclideanIsometry {
    std::vector<int> signs;         // each +1 or -1
    std::vector<long long> trans;

    static EuclideanIsometry identity(int d);
    int dim() const { return static_cast<int>(signs.size()); }
    bool is_translation() const;
    EuclideanIsometry compose(const EuclideanIsometry& other) const;  // this after other
    EuclideanIsometry inverse() const;
    bool operator==(const EuclideanIsometry&) const = default;
};

/// Hermite normal form of the lattice generated by the rows: echelon rows
/// with positive pivots at increasing columns, and every other row's entry
/// in a pivot column reduced into [0, pivot). Zero rows are dropped.
/// Canonical, so two generating sets span the same lattice iff their forms
/// coincide.
std::vector<std::vector<long long>> lattice_hnf(
    const std::vector<std::vector<long long>>& generators, int d);

/// Determinant of a full-rank HNF basis (product of the pivots).
long long lattice_determinant(const std::vector<std::vector<long long>>& hnf_rows);

struct SubspaceTriple {
    GF2Subspace vx, vy, vz;  // spans of the three opposite-face colour pairs
};

SubspaceTriple opposite_pair_spans(const Colouring& cube);

/// Decides whether the flat 3-manifold of a proper orientable cube colouring
/// is a 3-torus or the half-turn torus bundle.  Colourings whose deck group
/// has a larger rotation group (possible from image dimension 4 onwards, with
/// point group Z/2 x Z/2) are reported as Other.
CubeClass classify_cube_colouring(const Colouring& c);

/// The rotation subgroup of the point group of the cube colouring's deck
/// group, computed exactly: a half-turn about axis a exists iff some cell
/// offset with odd coordinates exactly off-axis has vanishing colour label.
/// Returns the order (1, 2 or 4).
std::uint64_t cube_point_group_order(const Colouring& c);

struct FlatManifoldData {
    int dim = 0;
    std::vector<EuclideanIsometry> deck_generators;
    std::vector<std::vector<long long>> translation_lattice;  // HNF rows
    std::uint64_t point_group_order = 1;
    std::uint64_t volume = 0;  // covolume of the deck group, in unit boxes
    WolfType wolf_type = WolfType::Other;
};

/// Reflection walk over the box tessellation of Z^d: breadth-first search of
/// cells whose accumulated colour label vanishes yields deck transformations;
/// the walk stops once they generate a group of covolume 2^image_dim.
FlatManifoldData box_walk_deck_group(const Colouring& c);

}  // namespace polycol
