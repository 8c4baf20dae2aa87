#include "polycol/mutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polycol {

namespace {

int translation_sign(const GF2Vector& t) { return t.weight() % 2 ? -1 : 1; }

void require_symmetric(const Colouring& c) {
    if (c.polytope().name() != "P4" || c.s() != 5)
        throw std::invalid_argument("mutation machinery requires the symmetric P4 colouring");
    for (int f = 0; f < c.polytope().facet_count(); ++f)
        if (c.colour(f) != GF2Vector::from_string(c.polytope().facet_label(f)))
            throw std::invalid_argument("mutation machinery requires the symmetric P4 colouring");
}

std::vector<int> identity_perm() { return {0, 1, 2, 3, 4}; }

std::vector<int> perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::vector<int> perm = identity_perm();
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            perm[static_cast<std::size_t>(cyc[i] - 1)] =
                cyc[(i + 1) % cyc.size()] - 1;
    return perm;
}

bool eval(const GF2Vector& functional, const GF2Vector& x) { return functional.dot(x); }

/// Functional vanishing on the colours adjacent to the facet, and equal to 1
/// on the facet's own colour; its value tells the two sides of the
/// hypersurface apart (0 on the side of the base copy).
GF2Vector side_functional(const Colouring& c, int facet) {
    std::vector<GF2Vector> vectors;
    std::vector<bool> rhs;
    for (int g : c.polytope().dart(facet)) {
        vectors.push_back(c.colour(g));
        rhs.push_back(false);
    }
    vectors.push_back(c.colour(facet));
    rhs.push_back(true);
    auto f = solve_functional(vectors, rhs, c.s());
    if (!f) throw std::logic_error("two-sided hypersurface has no side functional");
    return *f;
}

struct Block {
    PieceLabel label;
    bool is_short = false;
    int hyp = 0;        // long blocks: the cut hypersurface (1 or 2) at the outer face
    GF2Subspace sub;    // codimension-2 subspace of the copy space
    GF2Vector rep;
    GF2Vector mirror;   // long blocks: translation of the central reflection
    int u_value = 0;    // long blocks: side functional value, constant on the block

    Block() : sub(1) {}
};

struct CutComplex {
    Colouring colouring;
    std::array<FacetPairing, 2> pairings;
    std::array<int, 2> facets;
    std::array<std::array<int, 2>, 2> edges;  // K5 vertices of each cut facet
    int v_star = 0;                           // the vertex outside both edges
    std::array<GF2Vector, 2> side;            // side functionals of the two cuts
    std::array<ColouredIsometry, 2> lifts;

    explicit CutComplex(const Colouring& c, const MutationSpec& spec)
        : colouring(c),
          pairings{spec.first, spec.second},
          lifts{lift_pairing(c, spec.first), lift_pairing(c, spec.second)} {
        require_symmetric(c);
        facets = {spec.first.facet, spec.second.facet};
        for (int i = 0; i < 2; ++i) {
            auto [p, q] = p4_edge(facets[static_cast<std::size_t>(i)]);
            edges[static_cast<std::size_t>(i)] = {p, q};
        }
        if (c.polytope().adjacent(facets[0], facets[1]) || facets[0] == facets[1])
            throw std::invalid_argument("cut facets must be disjoint");
        for (int v = 1; v <= 5; ++v)
            if (!covers(v)) v_star = v;
        side = {side_functional(c, facets[0]), side_functional(c, facets[1])};
    }

    bool covers(int v) const {
        for (const auto& e : edges)
            if (e[0] == v || e[1] == v) return true;
        return false;
    }

    GF2Vector cusp_functional(int v) const { return cusp_hyperplane_equation(v); }

    /// Which cut hypersurface crosses the cusp at vertex v: the one whose
    /// facet survives in the K4 omitting v.
    int hyp_at(int v) const {
        return (edges[0][0] == v || edges[0][1] == v) ? 2 : 1;
    }

    /// Central reflection translation for a long cusp: the colour of the K4
    /// edge disjoint from the cut facet there.
    GF2Vector mirror_at(int v) const {
        int j = hyp_at(v);
        std::vector<int> rest;
        for (int w = 1; w <= 5; ++w) {
            if (w == v) continue;
            const auto& e = edges[static_cast<std::size_t>(j - 1)];
            if (w == e[0] || w == e[1]) continue;
            rest.push_back(w);
        }
        return colouring.colour(p4_facet(rest[0], rest[1]));
    }

    std::vector<Block> blocks() const {
        std::vector<Block> out;
        auto cosets = [&](const GF2Vector& fa, const GF2Vector& fb) {
            // Split the copy space by the two functionals; the (0,0) part is
            // the subspace, the others its cosets.
            std::map<std::pair<bool, bool>, std::vector<GF2Vector>> parts;
            for (const auto& x : colouring.image().elements())
                parts[{eval(fa, x), eval(fb, x)}].push_back(x);
            return parts;
        };
        GF2Subspace short_sub =
            span(cosets(cusp_functional(v_star), side[0]).at({false, false}),
                 colouring.s());
        for (auto& [key, cells] : cosets(cusp_functional(v_star), side[0])) {
            Block b;
            b.label = PieceLabel{v_star, key.second ? 'b' : 'a', key.first ? -1 : 1};
            b.is_short = true;
            b.sub = short_sub;
            b.rep = cells.front();
            out.push_back(std::move(b));
        }
        for (int v = 1; v <= 5; ++v) {
            if (v == v_star) continue;
            int j = hyp_at(v);
            auto parts = cosets(cusp_functional(v), side[static_cast<std::size_t>(j - 1)]);
            GF2Subspace sub = span(parts.at({false, false}), colouring.s());
            for (auto& [key, cells] : parts) {
                Block b;
                b.label = PieceLabel{v, 0, key.first ? -1 : 1};
                b.hyp = j;
                b.sub = sub;
                b.rep = cells.front();
                b.mirror = mirror_at(v);
                b.u_value = key.second ? 1 : 0;
                out.push_back(std::move(b));
            }
        }
        std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
            auto key = [](const Block& x) {
                return std::tuple(!x.is_short, x.label.vertex, x.label.sub,
                                  x.label.sign < 0, x.u_value);
            };
            return key(a) < key(b);
        });
        return out;
    }
};

bool same_coset(const Block& b, const GF2Subspace& sub, const GF2Vector& rep) {
    return b.sub == sub && b.sub.contains(rep + b.rep);
}

GF2Subspace map_subspace(const AffineGF2Map& m, const GF2Subspace& sub) {
    GF2Subspace out(sub.ambient_dim());
    for (const auto& b : sub.basis()) out.add(m.apply_linear(b));
    return out;
}

/// The square colouring of the cusp cross-section torus at vertex v,
/// transverse to the given facet: the two cube axes not containing it.
std::vector<GF2Vector> slice_square(const Colouring& c, int v, int facet) {
    VertexFigure fig = vertex_figure(c.polytope(), v - 1);
    std::vector<GF2Vector> out;
    for (int axis = 0; axis < 3; ++axis) {
        int f0 = fig.face_to_facet[static_cast<std::size_t>(2 * axis)];
        int f1 = fig.face_to_facet[static_cast<std::size_t>(2 * axis + 1)];
        if (f0 == facet || f1 == facet) continue;
        out.push_back(c.colour(f0));
        out.push_back(c.colour(f1));
    }
    return out;
}

GF2Vector square_cell_label(const std::vector<GF2Vector>& square, long long na,
                            long long nb) {
    auto axis = [&](int a, long long n) {
        long long r = ((n % 4) + 4) % 4;
        const GF2Vector& c0 = square[static_cast<std::size_t>(2 * a)];
        const GF2Vector& c1 = square[static_cast<std::size_t>(2 * a + 1)];
        switch (r) {
            case 1: return c1;
            case 2: return c0 + c1;
            case 3: return c0;
            default: return GF2Vector::zero(c0.dim());
        }
    };
    return axis(0, na) + axis(1, nb);
}

void classify_cycle(CuspCycle& cycle) {
    const auto cells = [&] {
        std::vector<GF2Vector> out;
        for (const auto& x : cycle.slice_subspace.elements())
            out.push_back(x + cycle.slice_rep);
        return out;
    }();
    bool pointwise = std::ranges::all_of(
        cells, [&](const GF2Vector& x) { return cycle.monodromy.apply(x) == x; });
    if (pointwise) {
        cycle.monodromy_class = MonodromyClass::Identity;
        cycle.realisation_cell = {0, 0};
        return;
    }
    GF2Vector u = cycle.monodromy.apply(cycle.slice_rep) + cycle.slice_rep;
    bool translation = std::ranges::all_of(
        cells, [&](const GF2Vector& x) { return cycle.monodromy.apply(x) == x + u; });
    if (!translation) {
        cycle.monodromy_class = MonodromyClass::Other;
        return;
    }
    // Realise the translation geometrically on the square-tessellated slice
    // torus: a cell with both coordinates even is reached by a translation,
    // one with both odd by a half-turn.
    std::optional<std::array<long long, 2>> even_cell, odd_cell;
    for (long long na = -1; na <= 2; ++na)
        for (long long nb = -1; nb <= 2; ++nb) {
            if (square_cell_label(cycle.slice_colours, na, nb) != u) continue;
            bool ea = ((na % 2) == 0), eb = ((nb % 2) == 0);
            if (ea && eb && !even_cell) even_cell = {na, nb};
            if (!ea && !eb && !odd_cell) odd_cell = {na, nb};
        }
    if (even_cell) {
        cycle.monodromy_class = MonodromyClass::Identity;
        cycle.realisation_cell = *even_cell;
    } else if (odd_cell) {
        cycle.monodromy_class = MonodromyClass::HyperellipticInvolution;
        cycle.realisation_cell = *odd_cell;
    } else {
        cycle.monodromy_class = MonodromyClass::Other;
    }
}

}  // namespace

const char* to_string(MonodromyClass m) {
    switch (m) {
        case MonodromyClass::Identity: return "Identity";
        case MonodromyClass::HyperellipticInvolution: return "HyperellipticInvolution";
        default: return "Other";
    }
}

std::string PieceLabel::str() const {
    std::string out = "(" + std::to_string(vertex);
    if (sub) out += sub;
    out += sign > 0 ? ",+)" : ",-)";
    return out;
}

ColouredIsometry ColouredIsometry::compose(const ColouredIsometry& other) const {
    return ColouredIsometry{symmetry.compose(other.symmetry),
                            affine.compose(other.affine),
                            orientation_sign * other.orientation_sign};
}

ColouredIsometry ColouredIsometry::inverse() const {
    Symmetry inv;
    inv.facet_perm.resize(symmetry.facet_perm.size());
    for (std::size_t f = 0; f < symmetry.facet_perm.size(); ++f)
        inv.facet_perm[static_cast<std::size_t>(symmetry.facet_perm[f])] =
            static_cast<int>(f);
    inv.sign = symmetry.sign;
    if (!symmetry.vertex_perm.empty()) {
        inv.vertex_perm.resize(symmetry.vertex_perm.size());
        for (std::size_t v = 0; v < symmetry.vertex_perm.size(); ++v)
            inv.vertex_perm[static_cast<std::size_t>(symmetry.vertex_perm[v])] =
                static_cast<int>(v);
    }
    return ColouredIsometry{inv, affine.inverse(), orientation_sign};
}

ColouredIsometry coloured_isometry(const std::vector<int>& vertex_perm,
                                   const GF2Vector& translation) {
    Symmetry sym = p4_symmetry(vertex_perm);
    AffineGF2Map affine = AffineGF2Map::coordinate_permutation(vertex_perm, translation);
    return ColouredIsometry{sym, affine, sym.sign * translation_sign(translation)};
}

Colouring symmetric_colouring() {
    PolytopePtr p4 = build_p4();
    std::vector<GF2Vector> colours;
    for (int f = 0; f < p4->facet_count(); ++f)
        colours.push_back(GF2Vector::from_string(p4->facet_label(f)));
    return Colouring(p4, 5, std::move(colours));
}

MutationSpec scenario_x() {
    MutationSpec spec;
    spec.first = FacetPairing{p4_facet(4, 5), perm_from_cycles({{1, 2, 3}, {4, 5}}),
                              GF2Vector::from_string("01101")};
    spec.second = FacetPairing{p4_facet(1, 2), perm_from_cycles({{3, 4, 5}}),
                               GF2Vector::from_string("00000")};
    return spec;
}

MutationSpec scenario_y() {
    MutationSpec spec = scenario_x();
    spec.second = FacetPairing{p4_facet(1, 2), perm_from_cycles({{1, 2}, {3, 4, 5}}),
                               GF2Vector::from_string("01010")};
    return spec;
}

MutationSpec identity_spec() {
    MutationSpec spec;
    spec.first = FacetPairing{p4_facet(4, 5), identity_perm(),
                              GF2Vector::zero(5)};
    spec.second = FacetPairing{p4_facet(1, 2), identity_perm(),
                               GF2Vector::zero(5)};
    return spec;
}

ColouredIsometry lift_pairing(const Colouring& c, const FacetPairing& pairing) {
    require_symmetric(c);
    auto [p, q] = p4_edge(pairing.facet);
    const auto& perm = pairing.vertex_perm;
    int ip = perm[static_cast<std::size_t>(p - 1)] + 1;
    int iq = perm[static_cast<std::size_t>(q - 1)] + 1;
    if (!((ip == p && iq == q) || (ip == q && iq == p)))
        throw std::invalid_argument("pairing symmetry must fix the cut facet");
    const GF2Vector fc = c.colour(pairing.facet);
    for (const GF2Vector& t : {pairing.translation_rep, pairing.translation_rep + fc}) {
        ColouredIsometry iso = coloured_isometry(perm, t);
        if (iso.orientation_sign == -1) return iso;
    }
    throw std::logic_error("no orientation-reversing lift exists");
}

ColouredIsometry parallel_reflection(const Colouring& c, const MutationSpec& spec,
                                     int vertex) {
    CutComplex cut(c, spec);
    if (vertex == cut.v_star || vertex < 1 || vertex > 5)
        throw std::invalid_argument("parallel reflections exist at the long cusps only");
    return coloured_isometry(identity_perm(), cut.mirror_at(vertex));
}

std::vector<ShortPieceBoundary> short_cusp_boundaries(const Colouring& c,
                                                      const MutationSpec& spec) {
    CutComplex cut(c, spec);
    std::vector<ShortPieceBoundary> out;
    // Independent check: sides of each cut hypersurface by union-find over
    // its boundary squares, glued across neighbour walls. The base-copy side
    // is the positive one.
    DevelopingGraph graph(c);
    std::array<std::vector<int>, 2> side_class;
    for (int j = 0; j < 2; ++j) {
        // Copies reachable from the base copy without crossing the cut are
        // on the positive side; the complementary coset is the negative one.
        std::vector<int> cls(graph.vertex_count(), 1);
        std::vector<int> stack = {0};
        cls[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int f : c.polytope().dart(cut.facets[static_cast<std::size_t>(j)])) {
                int u = graph.neighbour(v, f);
                if (cls[static_cast<std::size_t>(u)] != 0) {
                    cls[static_cast<std::size_t>(u)] = 0;
                    stack.push_back(u);
                }
            }
        }
        side_class[static_cast<std::size_t>(j)] = std::move(cls);
    }
    for (const auto& block : cut.blocks()) {
        if (!block.is_short) continue;
        ShortPieceBoundary b;
        b.label = block.label;
        b.towards_first = eval(cut.side[0], block.rep) ? -1 : 1;
        b.towards_second = eval(cut.side[1], block.rep) ? -1 : 1;
        int rep = graph.vertex_index(block.rep);
        for (int j = 0; j < 2; ++j) {
            int oracle = side_class[static_cast<std::size_t>(j)]
                                   [static_cast<std::size_t>(rep)] == 0
                             ? 1
                             : -1;
            int formula = j == 0 ? b.towards_first : b.towards_second;
            if (oracle != formula)
                throw std::logic_error("side functionals disagree with the cut oracle");
        }
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.label.sub, a.label.sign < 0) <
               std::tuple(b.label.sub, b.label.sign < 0);
    });
    return out;
}

std::vector<CuspCycle> trace_cycles(const Colouring& c, const MutationSpec& spec) {
    CutComplex cut(c, spec);
    std::vector<Block> blocks = cut.blocks();
    auto find_block = [&](const GF2Subspace& sub, const GF2Vector& rep) -> const Block& {
        for (const auto& b : blocks)
            if (same_coset(b, sub, rep)) return b;
        throw std::runtime_error("cycle walk left the piece decomposition");
    };
    auto u_of = [&](int hyp, const GF2Vector& x) {
        return eval(cut.side[static_cast<std::size_t>(hyp - 1)], x) ? 1 : 0;
    };

    std::vector<PieceLabel> visited;
    auto seen = [&](const PieceLabel& l) {
        return std::find(visited.begin(), visited.end(), l) != visited.end();
    };

    std::vector<CuspCycle> cycles;
    for (const auto& start : blocks) {
        if (seen(start.label)) continue;
        if (!start.is_short && start.u_value != 0) continue;
        CuspCycle cycle;
        cycle.slice_subspace = start.sub;
        cycle.slice_rep = start.rep;
        int start_hyp = start.is_short ? 1 : start.hyp;
        cycle.slice_colours = slice_square(
            c, start.label.vertex,
            cut.facets[static_cast<std::size_t>(start_hyp - 1)]);
        cycle.monodromy = AffineGF2Map::identity(c.s());
        cycle.pieces.push_back(start.label);
        cycle.fiber_length += start.is_short ? 1 : 2;
        visited.push_back(start.label);

        const Block* current = &start;
        int exit_hyp = start_hyp;
        while (true) {
            int side = u_of(exit_hyp, current->rep);
            const ColouredIsometry& lift = cut.lifts[static_cast<std::size_t>(exit_hyp - 1)];
            AffineGF2Map glue = side == 0 ? lift.affine : lift.affine.inverse();
            GF2Subspace image_sub = map_subspace(glue, current->sub);
            GF2Vector image_rep = glue.apply(current->rep);
            cycle.monodromy = glue.compose(cycle.monodromy);
            const Block& arrived = find_block(image_sub, image_rep);
            if (u_of(exit_hyp, image_rep) == side)
                throw std::runtime_error("pairing lift does not exchange the two sides");

            const Block* next = nullptr;
            int next_exit = 0;
            if (arrived.is_short) {
                next = &arrived;
                next_exit = exit_hyp == 1 ? 2 : 1;
            } else {
                if (arrived.hyp != exit_hyp)
                    throw std::runtime_error("cycle walk crossed to the wrong hypersurface");
                AffineGF2Map mirror =
                    AffineGF2Map::translation(arrived.mirror);
                cycle.monodromy = mirror.compose(cycle.monodromy);
                next = &find_block(arrived.sub, mirror.apply(arrived.rep));
                next_exit = arrived.hyp;
            }
            if (next == &start && next_exit == start_hyp) break;
            if (seen(arrived.label))
                throw std::runtime_error("cycle walk revisited a closed piece");
            visited.push_back(arrived.label);
            cycle.pieces.push_back(arrived.label);
            cycle.fiber_length += arrived.is_short ? 1 : 2;
            current = next;
            exit_hyp = next_exit;
        }
        // The composed map must return the starting slice to itself.
        if (map_subspace(cycle.monodromy, start.sub) != start.sub ||
            !start.sub.contains(cycle.monodromy.apply(start.rep) + start.rep))
            throw std::logic_error("monodromy does not preserve the starting slice");
        classify_cycle(cycle);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

MutantReport mutant_report(const Colouring& c, const MutationSpec& spec) {
    MutantReport report;
    report.euler_characteristic = euler_characteristic_p4(c);
    for (auto& cycle : trace_cycles(c, spec)) {
        MutantCusp cusp;
        Colouring slice(build_box(2), c.s(), cycle.slice_colours);
        FlatManifoldData flat = box_walk_deck_group(slice);
        cusp.slice_lattice = flat.translation_lattice;
        cusp.z_period = cycle.fiber_length;
        for (const auto& row : cusp.slice_lattice) {
            EuclideanIsometry t = EuclideanIsometry::identity(3);
            t.trans = {row[0], row[1], 0};
            cusp.generators.push_back(std::move(t));
        }
        EuclideanIsometry fiber = EuclideanIsometry::identity(3);
        fiber.trans[2] = cycle.fiber_length;
        auto [na, nb] = cycle.realisation_cell;
        for (int a = 0; a < 2; ++a) {
            long long n = a == 0 ? na : nb;
            auto i = static_cast<std::size_t>(a);
            if (((n % 2) + 2) % 2 == 0) {
                fiber.trans[i] = n;
            } else {
                fiber.signs[i] = -1;
                fiber.trans[i] = n + 1;
            }
        }
        cusp.generators.push_back(fiber);
        switch (cycle.monodromy_class) {
            case MonodromyClass::Identity: cusp.type = WolfType::Torus; break;
            case MonodromyClass::HyperellipticInvolution: cusp.type = WolfType::G2; break;
            default: cusp.type = WolfType::Other; break;
        }
        report.total_fiber_length += cycle.fiber_length;
        cusp.cycle = std::move(cycle);
        report.cusps.push_back(std::move(cusp));
    }
    return report;
}

std::vector<FixedStratum> fixed_point_check(const ColouredIsometry& iso,
                                            const DevelopingGraph& g) {
    const Colouring& c = g.colouring();
    const auto& p = c.polytope();
    if (iso.symmetry.facet_perm.size() != static_cast<std::size_t>(p.facet_count()))
        throw std::invalid_argument("isometry does not match the polytope");
    // The symmetry part must act on the colour image compatibly.
    {
        std::vector<GF2Vector> to;
        for (int f = 0; f < p.facet_count(); ++f)
            to.push_back(c.colour(iso.symmetry.facet_perm[static_cast<std::size_t>(f)]));
        if (!linear_extension(c.colours(), to, c.s()))
            throw std::invalid_argument("symmetry part is not admissible for the colouring");
    }

    std::vector<std::vector<int>> strata;
    for (int f = 0; f < p.facet_count(); ++f) strata.push_back({f});
    for (int f = 0; f < p.facet_count(); ++f)
        for (int h = f + 1; h < p.facet_count(); ++h)
            if (p.adjacent(f, h)) strata.push_back({f, h});

    std::vector<FixedStratum> out;
    for (const auto& stratum : strata) {
        std::vector<int> image;
        for (int f : stratum)
            image.push_back(iso.symmetry.facet_perm[static_cast<std::size_t>(f)]);
        std::sort(image.begin(), image.end());
        if (image != stratum) continue;
        // Linear part of a lift's affine hull: colours of every facet
        // containing or adjacent to the stratum.
        GF2Subspace u(c.s());
        for (int f : stratum) u.add(c.colour(f));
        for (int f = 0; f < p.facet_count(); ++f) {
            bool all = true;
            for (int h : stratum)
                if (f != h && !p.adjacent(f, h)) all = false;
            if (all) u.add(c.colour(f));
        }
        std::vector<GF2Vector> reps;
        for (const auto& x : g.vertices()) {
            GF2Vector r = u.reduce(x);
            if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
        }
        for (const auto& r : reps)
            if (u.contains(iso.affine.apply(r) + r))
                out.push_back(FixedStratum{stratum, r});
    }
    return out;
}

}  // namespace polycol
