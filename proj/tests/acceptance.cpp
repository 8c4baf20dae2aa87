// Acceptance gate: one pass/fail line per criterion, exact comparisons only.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polycol/cli.hpp"
#include "polycol/flatclass.hpp"
#include "polycol/mutation.hpp"
#include "polycol/oracle.hpp"

using namespace polycol;

namespace {

using Lattice = std::vector<std::vector<long long>>;

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
              << title << note << "\n";
    if (!ok) ++failures;
}

AffineGF2Map affine_pattern(const std::vector<int>& src, const std::string& t) {
    std::vector<GF2Vector> rows;
    for (int i = 0; i < 5; ++i)
        rows.push_back(GF2Vector::unit(5, src[static_cast<std::size_t>(i)]));
    return AffineGF2Map(std::move(rows), GF2Vector::from_string(t));
}

Colouring make(PolytopePtr p, int s, const std::vector<std::string>& bits) {
    std::vector<GF2Vector> colours;
    for (const auto& b : bits) colours.push_back(GF2Vector::from_string(b));
    return Colouring(std::move(p), s, std::move(colours));
}

Colouring halfturn_cube() {
    return make(build_box(3), 3, {"001", "111", "010", "010", "100", "100"});
}

bool classes_match(CubeClass c, WolfType w) {
    return (c == CubeClass::ThreeTorus && w == WolfType::Torus) ||
           (c == CubeClass::HyperellipticBundle && w == WolfType::G2) ||
           (c == CubeClass::Other && w == WolfType::Other);
}

bool census() {
    Colouring c = symmetric_colouring();
    if (!check_proper(c).proper) return false;
    if (!orientability_witness(c)) return false;
    if (c.copy_count() != 32) return false;
    if (!(euler_characteristic_p4(c) == Rational{2, 1})) return false;
    DevelopingGraph g(c);
    for (int f = 0; f < 10; ++f) {
        HypersurfaceReport r = hypersurface_report(c, f);
        if (r.lift_count != 1 || !r.two_sided || r.colour_class_separates)
            return false;
        if (hypersurface_components(g, f).count != 1) return false;
    }
    std::uint64_t cusps = 0;
    for (int w = 0; w < 5; ++w) {
        VertexFigureColouring vfc = induced_vertex_figure_colouring(c, w);
        if (vfc.cusp_count != 2) return false;
        if ((std::uint64_t{1} << vfc.vertex_span.dim()) != 16) return false;
        if (cusp_components(g, w).count != 2) return false;
        cusps += vfc.cusp_count;
    }
    return cusps == 10;
}

bool cusp_lattice() {
    Colouring fig = induced_vertex_figure_colouring(symmetric_colouring(), 2).cube;
    FlatManifoldData flat = box_walk_deck_group(fig);
    return flat.translation_lattice ==
               lattice_hnf({{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}, 3) &&
           classify_cube_colouring(fig) == CubeClass::ThreeTorus &&
           flat.wolf_type == WolfType::Torus;
}

bool hypersurface_cusps() {
    Colouring c = symmetric_colouring();
    Lattice expected = lattice_hnf({{2, 2}, {2, -2}}, 2);
    for (int f = 0; f < 10; ++f) {
        std::uint64_t cusps = 0;
        for (const auto& s : hypersurface_cusp_sections(c, f)) {
            cusps += s.count;
            if (s.squares_each != 8) return false;
            if (box_walk_deck_group(s.slice).translation_lattice != expected)
                return false;
        }
        if (cusps != 6) return false;
    }
    return true;
}

bool cube_example() {
    Colouring c = halfturn_cube();
    FlatManifoldData flat = box_walk_deck_group(c);
    if (flat.volume != 8) return false;
    if (flat.wolf_type != WolfType::G2) return false;
    if (classify_cube_colouring(c) != CubeClass::HyperellipticBundle) return false;
    // The deck group contains the screw (x,-y,-z) + (2,0,0) up to the
    // translation lattice, and the translations (0,2,0) and (0,0,2).
    Lattice lat = flat.translation_lattice;
    if (lat != Lattice{{4, 0, 0}, {0, 2, 0}, {0, 0, 2}}) return false;
    bool screw = false;
    for (const auto& g : flat.deck_generators)
        if (g.signs == std::vector<int>{1, -1, -1}) {
            // (trans - (2,0,0)) must lie in the lattice.
            long long dx = g.trans[0] - 2, dy = g.trans[1], dz = g.trans[2];
            if (dx % 4 == 0 && dy % 2 == 0 && dz % 2 == 0) screw = true;
        }
    return screw;
}

bool lift_extensions() {
    Colouring c = symmetric_colouring();
    MutationSpec x = scenario_x(), y = scenario_y();
    return lift_pairing(c, x.first).affine ==
               affine_pattern({2, 0, 1, 4, 3}, "10001") &&
           lift_pairing(c, x.second).affine ==
               affine_pattern({0, 1, 4, 2, 3}, "00111") &&
           lift_pairing(c, y.first).affine ==
               affine_pattern({2, 0, 1, 4, 3}, "10001") &&
           lift_pairing(c, y.second).affine ==
               affine_pattern({1, 0, 4, 2, 3}, "01010");
}

bool compositions() {
    Colouring c = symmetric_colouring();
    MutationSpec x = scenario_x(), y = scenario_y();
    AffineGF2Map phi1 = lift_pairing(c, x.first).affine;
    AffineGF2Map phi2x = lift_pairing(c, x.second).affine;
    AffineGF2Map phi2y = lift_pairing(c, y.second).affine;
    AffineGF2Map r1 = parallel_reflection(c, x, 1).affine;
    AffineGF2Map r2 = parallel_reflection(c, x, 2).affine;
    AffineGF2Map r4 = parallel_reflection(c, x, 4).affine;
    AffineGF2Map r5 = parallel_reflection(c, x, 5).affine;
    AffineGF2Map psi1 = phi1.compose(r2).compose(phi1).compose(r1).compose(phi1);
    AffineGF2Map psi2x = phi2x.compose(r5).compose(phi2x).compose(r4).compose(phi2x);
    AffineGF2Map psi2y = phi2y.compose(r5).compose(phi2y).compose(r4).compose(phi2y);
    return psi1 == affine_pattern({0, 1, 2, 4, 3}, "11110") &&
           psi2x == affine_pattern({0, 1, 2, 3, 4}, "00111") &&
           psi2y == affine_pattern({1, 0, 2, 3, 4}, "10111");
}

bool scenario_x_report() {
    Colouring c = symmetric_colouring();
    MutantReport report = mutant_report(c, scenario_x());
    if (report.cusps.size() != 1) return false;
    const MutantCusp& cusp = report.cusps[0];
    std::vector<std::string> pieces;
    for (const auto& p : cusp.cycle.pieces) pieces.push_back(p.str());
    if (pieces != std::vector<std::string>{
                      "(3a,+)", "(1,-)", "(2,-)", "(3b,-)", "(4,-)", "(5,-)",
                      "(3a,-)", "(1,+)", "(2,+)", "(3b,+)", "(5,+)", "(4,+)"})
        return false;
    if (!cusp.cycle.monodromy.linear_is_identity()) return false;
    if (cusp.cycle.monodromy.translation() != GF2Vector::from_string("00011"))
        return false;
    if (cusp.cycle.monodromy_class != MonodromyClass::HyperellipticInvolution)
        return false;
    if (cusp.type != WolfType::G2) return false;
    if (cusp.slice_lattice != lattice_hnf({{2, 2}, {2, -2}}, 2)) return false;
    bool screw = false;
    for (const auto& g : cusp.generators)
        if (g.signs == std::vector<int>{-1, -1, 1} && g.trans[2] == 20)
            screw = true;
    return screw && report.euler_characteristic == Rational{2, 1};
}

bool scenario_y_report() {
    Colouring c = symmetric_colouring();
    MutantReport report = mutant_report(c, scenario_y());
    if (report.cusps.size() != 1) return false;
    const MutantCusp& cusp = report.cusps[0];
    if (cusp.cycle.monodromy_class != MonodromyClass::Identity) return false;
    if (!cusp.cycle.monodromy.is_identity()) return false;
    if (cusp.type != WolfType::Torus) return false;
    Lattice rows;
    for (const auto& r : cusp.slice_lattice) rows.push_back({r[0], r[1], 0});
    for (const auto& g : cusp.generators)
        if (g.is_translation() && g.trans[2] != 0) rows.push_back(g.trans);
    return lattice_hnf(rows, 3) ==
               lattice_hnf({{2, 2, 0}, {2, -2, 0}, {0, 0, 20}}, 3) &&
           report.euler_characteristic == Rational{2, 1};
}

bool property_suite() {
    // Exhaustive cube enumeration, all colour dimensions up to 5.
    for (int s = 1; s <= 5; ++s) {
        EnumerationResult res = enumerate_proper_colourings(build_box(3), s);
        if (res.capped) return false;
        for (const Colouring& c : res.classes) {
            DevelopingGraph g(c);
            for (int f = 0; f < 6; ++f) {
                HypersurfaceReport r = hypersurface_report(c, f);
                if (hypersurface_components(g, f).count != r.lift_count)
                    return false;
                if (two_sided_by_tube(g, f) != r.two_sided) return false;
                if (colour_class_separates_by_cut(g, f) !=
                    r.colour_class_separates)
                    return false;
            }
            if (orientability_witness(c)) {
                if (!classes_match(classify_cube_colouring(c),
                                   box_walk_deck_group(c).wolf_type))
                    return false;
            }
        }
    }
    // Exhaustive 4-polytope enumeration with 4-bit colours.
    EnumerationOptions options;
    options.max_classes = 100000;
    EnumerationResult res =
        enumerate_proper_colourings(build_p4(), 4, options);
    if (res.classes.empty()) return false;
    for (const Colouring& c : res.classes) {
        DevelopingGraph g(c);
        for (int f = 0; f < 10; ++f) {
            HypersurfaceReport r = hypersurface_report(c, f);
            if (hypersurface_components(g, f).count != r.lift_count)
                return false;
            if (two_sided_by_tube(g, f) != r.two_sided) return false;
            if (colour_class_separates_by_cut(g, f) != r.colour_class_separates)
                return false;
        }
        for (int w = 0; w < 5; ++w)
            if (cusp_components(g, w).count !=
                induced_vertex_figure_colouring(c, w).cusp_count)
                return false;
    }
    return true;
}

bool invariant_suite() {
    std::mt19937 rng(20260824);
    auto random_vector = [&](int dim) {
        return GF2Vector(dim, rng() & ((std::uint64_t{1} << dim) - 1));
    };
    // Affine round trips over random invertible maps.
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 6);
        std::vector<int> perm(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        AffineGF2Map f =
            AffineGF2Map::coordinate_permutation(perm, random_vector(dim));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
            GF2Vector v(dim, x);
            if (f.inverse().apply(f.apply(v)) != v) return false;
        }
        if (!f.compose(f.inverse()).is_identity()) return false;
    }
    // Coset arithmetic: reduction is constant exactly on cosets.
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 7);
        GF2Subspace sp(dim);
        for (int k = 0; k < 3; ++k) sp.add(random_vector(dim));
        GF2Vector v = random_vector(dim), w = random_vector(dim);
        if ((sp.reduce(v) == sp.reduce(w)) != sp.contains(v + w)) return false;
        if (sp.dim() < dim &&
            sp.quotient_coords(v + w) !=
                sp.quotient_coords(v) + sp.quotient_coords(w))
            return false;
    }
    // Orientation functional vs brute-force odd-subset search.
    for (int trial = 0; trial < 500; ++trial) {
        int s = 1 + static_cast<int>(rng() % 4);
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<GF2Vector> colours;
        for (int k = 0; k < n; ++k) colours.push_back(random_vector(s));
        bool odd_subset_zero = false;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            int bits = 0;
            GF2Vector sum = GF2Vector::zero(s);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    ++bits;
                    sum = sum + colours[static_cast<std::size_t>(i)];
                }
            if (bits % 2 == 1 && sum.is_zero()) odd_subset_zero = true;
        }
        auto f = orientation_functional(colours, s);
        if (f.has_value() != !odd_subset_zero) return false;
        if (f)
            for (const auto& c : colours)
                if (!f->dot(c)) return false;
    }
    // Canonical forms are constant on symmetry orbits.
    Colouring cube = halfturn_cube();
    auto canon = canonical_colour_matrix(cube);
    for (const auto& sym : cube.polytope().symmetries())
        if (canonical_colour_matrix(cube.relabelled(sym)) != canon) return false;
    Colouring sym_c = symmetric_colouring();
    auto canon_p4 = canonical_colour_matrix(sym_c);
    for (const auto& sym : sym_c.polytope().symmetries())
        if (canonical_colour_matrix(sym_c.relabelled(sym)) != canon_p4)
            return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "symmetric colouring census", census);
    criterion(2, "cusp lattice and classification", cusp_lattice);
    criterion(3, "hypersurface cusp sections", hypersurface_cusps);
    criterion(4, "half-turn cube example", cube_example);
    criterion(5, "pairing lift extensions", lift_extensions);
    criterion(6, "composition identities", compositions);
    criterion(7, "twisted mutation scenario", scenario_x_report);
    criterion(8, "straight mutation scenario", scenario_y_report);
    criterion(9, "formula/oracle property suite", property_suite);
    criterion(10, "invariant suite", invariant_suite);
    if (failures == 0)
        std::cout << "ALL CRITERIA PASSED\n";
    else
        std::cout << failures << " CRITERIA FAILED\n";
    return failures == 0 ? 0 : 1;
}
