#include "polycol/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polycol {

namespace {

void require_proper(const Colouring& c) {
    if (!check_proper(c).proper)
        throw std::invalid_argument("colouring is not proper");
}

bool rank_equals_size(const Colouring& c, const std::vector<int>& facets) {
    GF2Subspace s(c.s());
    for (int f : facets)
        if (!s.add(c.colour(f))) return false;
    return true;
}

}  // namespace

Colouring::Colouring(PolytopePtr polytope, int s, std::vector<GF2Vector> colours)
    : polytope_(std::move(polytope)), s_(s), colours_(std::move(colours)), image_(s) {
    if (static_cast<int>(colours_.size()) != polytope_->facet_count())
        throw std::invalid_argument("colouring must assign one colour per facet");
    for (const auto& v : colours_) {
        if (v.dim() != s_)
            throw std::invalid_argument("colour dimension differs from declared dimension");
        image_.add(v);
    }
}

Colouring Colouring::relabelled(const Symmetry& sym) const {
    std::vector<GF2Vector> out(colours_.size(), GF2Vector::zero(s_));
    for (std::size_t f = 0; f < colours_.size(); ++f)
        out[static_cast<std::size_t>(sym.facet_perm[f])] = colours_[f];
    return Colouring(polytope_, s_, std::move(out));
}

ProperVerdict check_proper(const Colouring& c) {
    ProperVerdict v;
    const auto& p = c.polytope();
    for (std::size_t i = 0; i < p.simple_vertices().size(); ++i)
        if (!rank_equals_size(c, p.simple_vertices()[i]))
            v.bad_simple_vertices.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < p.ideal_edges().size(); ++i)
        if (!rank_equals_size(c, p.ideal_edges()[i]))
            v.bad_ideal_edges.push_back(static_cast<int>(i));
    v.proper = v.bad_simple_vertices.empty() && v.bad_ideal_edges.empty();
    return v;
}

std::optional<GF2Vector> orientability_witness(const Colouring& c) {
    return orientation_functional(c.colours(), c.s());
}

HypersurfaceReport hypersurface_report(const Colouring& c, int facet) {
    require_proper(c);
    HypersurfaceReport r;
    r.facet = facet;
    const auto dart = c.polytope().dart(facet);
    std::vector<GF2Vector> neighbours;
    for (int g : dart) neighbours.push_back(c.colour(g));
    GF2Subspace dart_span = span(neighbours, c.s());

    r.W = dart_span;
    r.W.add(c.colour(facet));
    r.lift_count = std::uint64_t{1} << (c.image_dim() - r.W.dim());
    r.two_sided = !dart_span.contains(c.colour(facet));

    GF2Subspace others(c.s());
    for (int g = 0; g < c.polytope().facet_count(); ++g)
        if (c.colour(g) != c.colour(facet)) others.add(c.colour(g));
    r.colour_class_separates = !others.contains(c.colour(facet));
    return r;
}

InducedFacetColouring induced_facet_colouring(const Colouring& c, int facet) {
    require_proper(c);
    InducedFacetColouring out;
    out.facets = c.polytope().dart(facet);
    GF2Subspace by = span({c.colour(facet)}, c.s());
    out.image = GF2Subspace(c.s() - 1);
    for (int g : out.facets) {
        out.colours.push_back(by.quotient_coords(c.colour(g)));
        out.image.add(out.colours.back());
    }
    return out;
}

VertexFigureColouring induced_vertex_figure_colouring(const Colouring& c, int w) {
    require_proper(c);
    VertexFigure fig = vertex_figure(c.polytope(), w);
    std::vector<GF2Vector> cube_colours;
    for (int f : fig.face_to_facet) cube_colours.push_back(c.colour(f));
    GF2Subspace vw(c.s());
    for (int f : c.polytope().ideal_vertices().at(static_cast<std::size_t>(w)))
        vw.add(c.colour(f));
    std::uint64_t cusps = std::uint64_t{1} << (c.image_dim() - vw.dim());
    return VertexFigureColouring{Colouring(fig.cube, c.s(), std::move(cube_colours)),
                                 std::move(fig.face_to_facet), std::move(vw), cusps};
}

std::vector<HypersurfaceCuspSection> hypersurface_cusp_sections(const Colouring& c,
                                                               int facet) {
    if (c.polytope().name() != "P4")
        throw std::invalid_argument("hypersurface cusp sections are defined for P4");
    require_proper(c);
    GF2Subspace w_f = hypersurface_report(c, facet).W;
    std::vector<HypersurfaceCuspSection> out;
    for (std::size_t w = 0; w < c.polytope().ideal_vertices().size(); ++w) {
        const auto& incident = c.polytope().ideal_vertices()[w];
        if (std::find(incident.begin(), incident.end(), facet) == incident.end())
            continue;
        VertexFigure fig = vertex_figure(c.polytope(), static_cast<int>(w));
        // The two cube axes transverse to the facet form the section square.
        std::vector<GF2Vector> square;
        for (int axis = 0; axis < 3; ++axis) {
            int f0 = fig.face_to_facet[static_cast<std::size_t>(2 * axis)];
            int f1 = fig.face_to_facet[static_cast<std::size_t>(2 * axis + 1)];
            if (f0 == facet || f1 == facet) continue;
            square.push_back(c.colour(f0));
            square.push_back(c.colour(f1));
        }
        GF2Subspace u = span(square, c.s());
        u.add(c.colour(facet));
        HypersurfaceCuspSection section{
            static_cast<int>(w),
            std::uint64_t{1} << (w_f.dim() - u.dim()),
            std::uint64_t{1} << (u.dim() - 1),
            Colouring(build_box(2), c.s(), std::move(square))};
        out.push_back(std::move(section));
    }
    return out;
}

std::vector<AdmissibleSymmetry> admissible_symmetries(const Colouring& c) {
    std::vector<AdmissibleSymmetry> out;
    for (const auto& sym : c.polytope().symmetries()) {
        std::vector<GF2Vector> to;
        to.reserve(c.colours().size());
        for (std::size_t f = 0; f < c.colours().size(); ++f)
            to.push_back(c.colour(sym.facet_perm[f]));
        if (auto ext = linear_extension(c.colours(), to, c.s()))
            out.push_back(AdmissibleSymmetry{sym, *ext});
    }
    return out;
}

Rational euler_characteristic_p4(const Colouring& c) {
    if (c.polytope().name() != "P4")
        throw std::invalid_argument("Euler characteristic formula applies to P4 only");
    require_proper(c);
    Rational chi{static_cast<long long>(c.copy_count()), 16};
    long long g = std::gcd(chi.num, chi.den);
    chi.num /= g;
    chi.den /= g;
    return chi;
}

std::vector<GF2Vector> rref_colour_matrix(const std::vector<GF2Vector>& colours, int s) {
    // Tracked elimination: ech[k] is a linear combination of the pivot columns
    // found so far, in echelon form; expr[k] records that combination over the
    // coordinates e_1..e_r assigned to the pivots.
    std::vector<GF2Vector> ech, expr, out;
    for (const auto& col : colours) {
        GF2Vector residual = col;
        GF2Vector combo = GF2Vector::zero(s);
        for (std::size_t k = 0; k < ech.size(); ++k)
            if (!residual.is_zero() && residual.bit(ech[k].leading_coord())) {
                residual = residual + ech[k];
                combo = combo + expr[k];
            }
        if (residual.is_zero()) {
            out.push_back(combo);
        } else {
            int rank = static_cast<int>(ech.size());
            GF2Vector unit = GF2Vector::unit(s, rank);
            out.push_back(unit);
            // The new column equals residual + (combo's pivots), so record it.
            std::size_t pos = ech.size();
            ech.push_back(residual);
            expr.push_back(combo + unit);
            while (pos > 0 && ech[pos].leading_coord() < ech[pos - 1].leading_coord()) {
                std::swap(ech[pos], ech[pos - 1]);
                std::swap(expr[pos], expr[pos - 1]);
                --pos;
            }
        }
    }
    return out;
}

std::vector<GF2Vector> canonical_colour_matrix(const Colouring& c) {
    std::vector<GF2Vector> best;
    for (const auto& sym : c.polytope().symmetries()) {
        std::vector<GF2Vector> permuted(c.colours().size(), GF2Vector::zero(c.s()));
        for (std::size_t f = 0; f < c.colours().size(); ++f)
            permuted[static_cast<std::size_t>(sym.facet_perm[f])] = c.colour(static_cast<int>(f));
        auto candidate = rref_colour_matrix(permuted, c.s());
        if (best.empty() || candidate < best) best = std::move(candidate);
    }
    return best;
}

namespace {

struct Enumerator {
    PolytopePtr polytope;
    int s;
    EnumerationOptions options;
    // prefix_sets[f]: for every vertex/edge constraint containing facet f,
    // the members with index <= f. Full independence is required of each
    // complete set, so every assigned prefix must already be independent.
    std::vector<std::vector<std::vector<int>>> prefix_sets;
    std::vector<GF2Vector> colours;
    std::set<std::vector<GF2Vector>> seen;
    EnumerationResult result;
    bool stop = false;

    void prepare() {
        int m = polytope->facet_count();
        prefix_sets.assign(static_cast<std::size_t>(m), {});
        auto add_constraints = [&](const std::vector<std::vector<int>>& sets) {
            for (const auto& set : sets)
                for (int f : set) {
                    std::vector<int> prefix;
                    for (int g : set)
                        if (g <= f) prefix.push_back(g);
                    prefix_sets[static_cast<std::size_t>(f)].push_back(std::move(prefix));
                }
        };
        add_constraints(polytope->simple_vertices());
        add_constraints(polytope->ideal_edges());
        colours.assign(static_cast<std::size_t>(m), GF2Vector::zero(s));
    }

    bool prefix_ok(int f) const {
        for (const auto& prefix : prefix_sets[static_cast<std::size_t>(f)]) {
            GF2Subspace sp(s);
            for (int g : prefix)
                if (!sp.add(colours[static_cast<std::size_t>(g)])) return false;
        }
        return true;
    }

    void emit() {
        if (options.orientable_only &&
            !orientation_functional(colours, s).has_value())
            return;
        Colouring c(polytope, s, colours);
        auto canon = canonical_colour_matrix(c);
        if (!seen.insert(canon).second) return;
        result.classes.emplace_back(polytope, s, std::move(canon));
        if (result.classes.size() >= options.max_classes) {
            result.capped = true;
            stop = true;
        }
    }

    // Change-of-basis normalisation: the first independent colour must be
    // e_1, the next e_2, and so on; dependent colours lie in the span of
    // the pivots already placed. Visits one assignment per GL-orbit.
    void dfs(int f, int rank) {
        if (stop) return;
        if (f == polytope->facet_count()) {
            emit();
            return;
        }
        std::uint64_t span_size = std::uint64_t{1} << rank;
        for (std::uint64_t raw = 0; raw <= span_size && !stop; ++raw) {
            bool is_new_pivot = raw == span_size;
            if (is_new_pivot && rank >= s) break;
            colours[static_cast<std::size_t>(f)] =
                is_new_pivot ? GF2Vector::unit(s, rank) : GF2Vector(s, raw);
            if (!prefix_ok(f)) continue;
            dfs(f + 1, rank + (is_new_pivot ? 1 : 0));
        }
    }
};

}  // namespace

EnumerationResult enumerate_proper_colourings(PolytopePtr polytope, int s,
                                              const EnumerationOptions& options) {
    if (s < 1 || s > 6)
        throw std::invalid_argument("enumeration supports dimensions 1..6");
    Enumerator e{polytope, s, options};
    e.prepare();
    e.dfs(0, 0);
    return std::move(e.result);
}

}  // namespace polycol
