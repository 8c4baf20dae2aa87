#include <doctest.h>

#include <algorithm>
#include <random>

#include "polycol/mutation.hpp"

using namespace polycol;

namespace {

/// The affine map (x_0,..,x_4) -> (x_{src[0]}+t_0, ..., x_{src[4]}+t_4).
AffineGF2Map affine_pattern(const std::vector<int>& src, const std::string& t) {
    std::vector<GF2Vector> rows;
    for (int i = 0; i < 5; ++i)
        rows.push_back(GF2Vector::unit(5, src[static_cast<std::size_t>(i)]));
    return AffineGF2Map(std::move(rows), GF2Vector::from_string(t));
}

using Lattice = std::vector<std::vector<long long>>;

/// The full translation lattice of a toric mutant cusp: the slice lattice
/// extended by the fiber translation.
Lattice cusp_lattice_3d(const MutantCusp& cusp) {
    Lattice rows;
    for (const auto& r : cusp.slice_lattice) rows.push_back({r[0], r[1], 0});
    for (const auto& g : cusp.generators)
        if (g.is_translation() && g.trans[2] != 0) rows.push_back(g.trans);
    return lattice_hnf(rows, 3);
}

}  // namespace

TEST_CASE("coloured isometries carry the orientation sign of the functional") {
    // A facet reflection is an odd-weight translation, hence reversing.
    ColouredIsometry refl = coloured_isometry({0, 1, 2, 3, 4},
                                              GF2Vector::from_string("11100"));
    CHECK(refl.orientation_sign == -1);
    // An even permutation composed with an even-weight translation preserves.
    ColouredIsometry rot = coloured_isometry({1, 2, 0, 3, 4},
                                             GF2Vector::from_string("00011"));
    CHECK(rot.orientation_sign == 1);
    // Signs are multiplicative and stable under inversion.
    CHECK(refl.compose(rot).orientation_sign == -1);
    CHECK(refl.inverse().orientation_sign == -1);
    CHECK(rot.inverse().orientation_sign == 1);
    CHECK(refl.compose(refl.inverse()).affine.is_identity());
}

TEST_CASE("pairing lifts reproduce the published affine extensions exactly") {
    Colouring c = symmetric_colouring();
    MutationSpec x = scenario_x(), y = scenario_y();

    // (a,b,c,d,e) -> (c+1, a, b, e, d+1)
    ColouredIsometry phi1 = lift_pairing(c, x.first);
    CHECK(phi1.affine == affine_pattern({2, 0, 1, 4, 3}, "10001"));
    CHECK(phi1.orientation_sign == -1);

    // (a,b,c,d,e) -> (a, b, e+1, c+1, d+1)
    ColouredIsometry phi2x = lift_pairing(c, x.second);
    CHECK(phi2x.affine == affine_pattern({0, 1, 4, 2, 3}, "00111"));
    CHECK(phi2x.orientation_sign == -1);

    // The first pairing is shared by both scenarios.
    ColouredIsometry phi1y = lift_pairing(c, y.first);
    CHECK(phi1y.affine == phi1.affine);

    // (a,b,c,d,e) -> (b, a+1, e, c+1, d)
    ColouredIsometry phi2y = lift_pairing(c, y.second);
    CHECK(phi2y.affine == affine_pattern({1, 0, 4, 2, 3}, "01010"));
    CHECK(phi2y.orientation_sign == -1);

    // A pairing whose permutation moves the cut edge is rejected.
    FacetPairing bad{p4_facet(4, 5), {3, 1, 2, 0, 4}, GF2Vector::zero(5)};
    CHECK_THROWS(lift_pairing(c, bad));
}

TEST_CASE("parallel reflections translate by the opposite K4-edge colour") {
    Colouring c = symmetric_colouring();
    MutationSpec x = scenario_x();
    auto trans = [&](int vertex) {
        ColouredIsometry r = parallel_reflection(c, x, vertex);
        CHECK(r.affine.linear_is_identity());
        CHECK(r.orientation_sign == -1);
        return r.affine.translation().str();
    };
    CHECK(trans(1) == "10011");  // (a+1, b, c, d+1, e+1)
    CHECK(trans(2) == "01011");  // (a, b+1, c, d+1, e+1)
    CHECK(trans(4) == "11010");  // (a+1, b+1, c, d+1, e)
    CHECK(trans(5) == "11001");  // (a+1, b+1, c, d, e+1)
    CHECK_THROWS(parallel_reflection(c, x, 3));
}

TEST_CASE("five-fold reflection compositions match their closed forms") {
    Colouring c = symmetric_colouring();
    MutationSpec x = scenario_x(), y = scenario_y();
    AffineGF2Map phi1 = lift_pairing(c, x.first).affine;
    AffineGF2Map phi2x = lift_pairing(c, x.second).affine;
    AffineGF2Map phi2y = lift_pairing(c, y.second).affine;
    AffineGF2Map r1 = parallel_reflection(c, x, 1).affine;
    AffineGF2Map r2 = parallel_reflection(c, x, 2).affine;
    AffineGF2Map r4 = parallel_reflection(c, x, 4).affine;
    AffineGF2Map r5 = parallel_reflection(c, x, 5).affine;

    // psi1 = phi1 R2 phi1 R1 phi1 = (a+1, b+1, c+1, e+1, d)
    AffineGF2Map psi1 =
        phi1.compose(r2).compose(phi1).compose(r1).compose(phi1);
    CHECK(psi1 == affine_pattern({0, 1, 2, 4, 3}, "11110"));

    // psi2 = phi2 R5 phi2 R4 phi2 = (a, b, c+1, d+1, e+1)
    AffineGF2Map psi2x =
        phi2x.compose(r5).compose(phi2x).compose(r4).compose(phi2x);
    CHECK(psi2x == affine_pattern({0, 1, 2, 3, 4}, "00111"));

    // With the alternative pairing: psi2 = (b+1, a, c+1, d+1, e+1)
    AffineGF2Map psi2y =
        phi2y.compose(r5).compose(phi2y).compose(r4).compose(phi2y);
    CHECK(psi2y == affine_pattern({1, 0, 2, 3, 4}, "10111"));

    // Composing the reflections around the cusp cycle realises the mutant
    // monodromies: a translation by (0,0,0,1,1), and the identity.
    AffineGF2Map mono_x =
        psi2x.inverse().compose(psi1).compose(psi2x).compose(psi1);
    CHECK(mono_x == AffineGF2Map::translation(GF2Vector::from_string("00011")));
    AffineGF2Map mono_y =
        psi2y.inverse().compose(psi1.inverse()).compose(psi2y).compose(psi1);
    CHECK(mono_y.is_identity());
}

TEST_CASE("short cusp pieces have the published boundary sides") {
    Colouring c = symmetric_colouring();
    auto check_table = [&](const MutationSpec& spec) {
        auto b = short_cusp_boundaries(c, spec);
        REQUIRE(b.size() == 4);
        CHECK(b[0].label.str() == "(3a,+)");
        CHECK(b[0].towards_first == 1);
        CHECK(b[0].towards_second == 1);
        CHECK(b[1].label.str() == "(3a,-)");
        CHECK(b[1].towards_first == 1);
        CHECK(b[1].towards_second == -1);
        CHECK(b[2].label.str() == "(3b,+)");
        CHECK(b[2].towards_first == -1);
        CHECK(b[2].towards_second == -1);
        CHECK(b[3].label.str() == "(3b,-)");
        CHECK(b[3].towards_first == -1);
        CHECK(b[3].towards_second == 1);
    };
    // The piece inventory depends only on the cut, not on the pairings.
    check_table(scenario_x());
    check_table(scenario_y());
    check_table(identity_spec());
}

TEST_CASE("the twisted scenario yields one cusp with a half-turn monodromy") {
    Colouring c = symmetric_colouring();
    auto cycles = trace_cycles(c, scenario_x());
    REQUIRE(cycles.size() == 1);
    const CuspCycle& cy = cycles[0];

    std::vector<std::string> pieces;
    for (const auto& p : cy.pieces) pieces.push_back(p.str());
    CHECK(pieces == std::vector<std::string>{
                        "(3a,+)", "(1,-)", "(2,-)", "(3b,-)", "(4,-)", "(5,-)",
                        "(3a,-)", "(1,+)", "(2,+)", "(3b,+)", "(5,+)", "(4,+)"});
    CHECK(cy.fiber_length == 20);
    CHECK(cy.monodromy.linear_is_identity());
    CHECK(cy.monodromy.translation().str() == "00011");
    CHECK(cy.monodromy_class == MonodromyClass::HyperellipticInvolution);
    // Both realisation coordinates are odd: a point-free half turn.
    CHECK(cy.realisation_cell[0] % 2 != 0);
    CHECK(cy.realisation_cell[1] % 2 != 0);

    MutantReport report = mutant_report(c, scenario_x());
    REQUIRE(report.cusps.size() == 1);
    const MutantCusp& cusp = report.cusps[0];
    CHECK(cusp.type == WolfType::G2);
    CHECK(cusp.slice_lattice == lattice_hnf({{2, 2}, {2, -2}}, 2));
    CHECK(cusp.z_period == 20);
    CHECK(report.euler_characteristic == Rational{2, 1});
    CHECK(report.total_fiber_length == 20);

    // The fiber generator is the screw motion (-x, -y, z + 20).
    bool has_screw = false;
    for (const auto& g : cusp.generators)
        if (g.signs == std::vector<int>{-1, -1, 1}) {
            has_screw = true;
            CHECK(g.trans[2] == 20);
        }
    CHECK(has_screw);
}

TEST_CASE("the straight scenario yields one toric cusp") {
    Colouring c = symmetric_colouring();
    auto cycles = trace_cycles(c, scenario_y());
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].fiber_length == 20);
    CHECK(cycles[0].monodromy.is_identity());
    CHECK(cycles[0].monodromy_class == MonodromyClass::Identity);

    MutantReport report = mutant_report(c, scenario_y());
    REQUIRE(report.cusps.size() == 1);
    const MutantCusp& cusp = report.cusps[0];
    CHECK(cusp.type == WolfType::Torus);
    CHECK(cusp.slice_lattice == lattice_hnf({{2, 2}, {2, -2}}, 2));
    CHECK(cusp.z_period == 20);
    CHECK(cusp_lattice_3d(cusp) ==
          lattice_hnf({{2, 2, 0}, {2, -2, 0}, {0, 0, 20}}, 3));
    CHECK(report.euler_characteristic == Rational{2, 1});
}

TEST_CASE("identity pairings reproduce the ten toric cusps of the unmutated manifold") {
    Colouring c = symmetric_colouring();
    MutantReport report = mutant_report(c, identity_spec());
    CHECK(report.cusps.size() == 10);
    CHECK(report.total_fiber_length == 20);
    Lattice expected = lattice_hnf({{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}, 3);
    for (const MutantCusp& cusp : report.cusps) {
        CHECK(cusp.type == WolfType::Torus);
        CHECK(cusp.cycle.monodromy_class == MonodromyClass::Identity);
        CHECK(cusp_lattice_3d(cusp) == expected);
    }
}

TEST_CASE("the total fiber length is 20 for every admissible pairing") {
    Colouring c = symmetric_colouring();
    std::mt19937 rng(31);
    // Random pairings: any permutations fixing the two cut edges setwise,
    // with arbitrary translation representatives.
    auto random_pairing = [&](int facet) {
        auto [i, j] = p4_edge(facet);
        std::vector<int> others;
        for (int v = 0; v < 5; ++v)
            if (v != i - 1 && v != j - 1) others.push_back(v);
        std::shuffle(others.begin(), others.end(), rng);
        std::vector<int> perm(5);
        bool swap_edge = rng() % 2;
        perm[static_cast<std::size_t>(i - 1)] = swap_edge ? j - 1 : i - 1;
        perm[static_cast<std::size_t>(j - 1)] = swap_edge ? i - 1 : j - 1;
        std::vector<int> sources;
        for (int v = 0; v < 5; ++v)
            if (v != i - 1 && v != j - 1) sources.push_back(v);
        for (std::size_t k = 0; k < sources.size(); ++k)
            perm[static_cast<std::size_t>(sources[k])] = others[k];
        FacetPairing pairing{facet, perm, GF2Vector(5, rng() % 32)};
        // The reversing lift must exchange the two sides of the hypersurface;
        // flipping an edge coordinate of the representative toggles that.
        GF2Vector side = GF2Vector::from_string(
            c.polytope().facet_label(facet));
        if (!side.dot(lift_pairing(c, pairing).affine.translation()))
            pairing.translation_rep =
                pairing.translation_rep + GF2Vector::unit(5, i - 1);
        return pairing;
    };
    for (int trial = 0; trial < 20; ++trial) {
        MutationSpec spec{random_pairing(p4_facet(4, 5)),
                          random_pairing(p4_facet(1, 2))};
        MutantReport report = mutant_report(c, spec);
        CHECK(report.total_fiber_length == 20);
        CHECK(report.euler_characteristic == Rational{2, 1});
        // The piece inventory is always the 4 short and 8 long pieces.
        int pieces = 0, shorts = 0;
        for (const auto& cusp : report.cusps)
            for (const auto& p : cusp.cycle.pieces) {
                ++pieces;
                if (p.sub != 0) ++shorts;
            }
        CHECK(pieces == 12);
        CHECK(shorts == 4);
    }
}

TEST_CASE("mutation requires the symmetric colouring") {
    std::vector<GF2Vector> colours;
    PolytopePtr p4 = build_p4();
    for (int f = 0; f < 10; ++f)
        colours.push_back(GF2Vector::from_string(p4->facet_label(f)));
    std::swap(colours[0], colours[9]);
    Colouring other(p4, 5, std::move(colours));
    CHECK_THROWS_AS(mutant_report(other, scenario_x()), std::invalid_argument);
}

TEST_CASE("preserved strata detection") {
    Colouring c = symmetric_colouring();
    DevelopingGraph g(c);

    // The identity preserves a lift of every stratum.
    ColouredIsometry id =
        coloured_isometry({0, 1, 2, 3, 4}, GF2Vector::zero(5));
    auto fixed = fixed_point_check(id, g);
    for (int f = 0; f < 10; ++f)
        CHECK(std::count_if(fixed.begin(), fixed.end(), [&](const FixedStratum& s) {
                  return s.facets == std::vector<int>{f};
              }) > 0);

    // The involution swapping the two cut edges preserves the strata of the
    // four edges it fixes setwise, and no stratum of the swapped facets:
    // it exchanges the two cut hypersurfaces.
    ColouredIsometry swap =
        coloured_isometry({3, 4, 2, 0, 1}, GF2Vector::zero(5));  // (14)(25)
    auto swapped = fixed_point_check(swap, g);
    CHECK(!swapped.empty());
    int f45 = p4_facet(4, 5), f12 = p4_facet(1, 2);
    for (const auto& s : swapped) {
        CHECK(std::count(s.facets.begin(), s.facets.end(), f45) == 0);
        CHECK(std::count(s.facets.begin(), s.facets.end(), f12) == 0);
    }
    CHECK(std::count_if(swapped.begin(), swapped.end(), [&](const FixedStratum& s) {
              return s.facets == std::vector<int>{p4_facet(1, 4)};
          }) > 0);

    // A facet reflection preserves its own facet stratum.
    ColouredIsometry refl = coloured_isometry({0, 1, 2, 3, 4},
                                              GF2Vector::from_string("11100"));
    CHECK(!fixed_point_check(refl, g).empty());
}
