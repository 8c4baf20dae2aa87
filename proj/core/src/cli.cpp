#include "polycol/cli.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycol/flatclass.hpp"
#include "polycol/oracle.hpp"

namespace polycol::cli {

namespace {

using nlohmann::json;

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

json lattice_json(const std::vector<std::vector<long long>>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

json isometry_json(const EuclideanIsometry& g) {
    return json{{"signs", g.signs}, {"trans", g.trans}};
}

json affine_json(const AffineGF2Map& m) {
    json rows = json::array();
    for (const auto& r : m.rows()) rows.push_back(r.str());
    return json{{"rows", rows}, {"translation", m.translation().str()}};
}

json colours_json(const Colouring& c) {
    json out = json::array();
    for (int f = 0; f < c.polytope().facet_count(); ++f)
        out.push_back(json{{"facet", c.polytope().facet_id(f)},
                           {"colour", c.colour(f).str()}});
    return out;
}

json verdict_json(const Colouring& c, const ProperVerdict& v) {
    json bad_vertices = json::array();
    for (int i : v.bad_simple_vertices) {
        json facets = json::array();
        for (int f : c.polytope().simple_vertices()[static_cast<std::size_t>(i)])
            facets.push_back(c.polytope().facet_id(f));
        bad_vertices.push_back(json{{"vertex", i}, {"facets", facets}});
    }
    json bad_edges = json::array();
    for (int i : v.bad_ideal_edges) {
        json facets = json::array();
        for (int f : c.polytope().ideal_edges()[static_cast<std::size_t>(i)])
            facets.push_back(c.polytope().facet_id(f));
        bad_edges.push_back(json{{"edge", i}, {"facets", facets}});
    }
    return json{{"simple_vertices", bad_vertices}, {"ideal_edges", bad_edges}};
}

bool classes_match(CubeClass c, WolfType w) {
    return (c == CubeClass::ThreeTorus && w == WolfType::Torus) ||
           (c == CubeClass::HyperellipticBundle && w == WolfType::G2) ||
           (c == CubeClass::Other && w == WolfType::Other);
}

std::uint64_t total_cusp_count(const Colouring& c) {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < c.polytope().ideal_vertices().size(); ++w)
        total += induced_vertex_figure_colouring(c, static_cast<int>(w)).cusp_count;
    return total;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}

Colouring parse_colouring(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    PolytopePtr polytope;
    int dim = -1;
    std::map<int, GF2Vector> assigned;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        if (tokens.front() == "polytope") {
            if (tokens.size() != 2 || polytope)
                throw ParseError(source, lineno, "expected a single `polytope <name>` line");
            try {
                polytope = build_polytope(tokens[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(source, lineno, e.what());
            }
        } else if (tokens.front() == "dim") {
            if (tokens.size() != 2 || dim >= 0)
                throw ParseError(source, lineno, "expected a single `dim <s>` line");
            try {
                dim = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw ParseError(source, lineno, "dimension is not a number");
            }
            if (dim < 1 || dim > 64)
                throw ParseError(source, lineno, "dimension must be in 1..64");
        } else {
            if (!polytope || dim < 0)
                throw ParseError(source, lineno,
                                 "facet lines must follow `polytope` and `dim`");
            if (tokens.size() != 2)
                throw ParseError(source, lineno, "expected `<facet-id> <bitstring>`");
            int f = polytope->facet_index(tokens[0]);
            if (f < 0)
                throw ParseError(source, lineno, "unknown facet id: " + tokens[0]);
            if (assigned.contains(f))
                throw ParseError(source, lineno, "facet coloured twice: " + tokens[0]);
            GF2Vector v = GF2Vector::zero(1);
            try {
                v = GF2Vector::from_string(tokens[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(source, lineno, e.what());
            }
            if (v.dim() != dim)
                throw ParseError(source, lineno, "bit string length differs from dim");
            assigned.emplace(f, v);
        }
    }
    if (!polytope) throw ParseError(source, lineno, "missing `polytope` line");
    if (dim < 0) throw ParseError(source, lineno, "missing `dim` line");
    std::vector<GF2Vector> colours;
    for (int f = 0; f < polytope->facet_count(); ++f) {
        auto it = assigned.find(f);
        if (it == assigned.end())
            throw ParseError(source, lineno,
                             "facet not coloured: " + polytope->facet_id(f));
        colours.push_back(it->second);
    }
    return Colouring(polytope, dim, std::move(colours));
}

Colouring load_colouring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_colouring(in, path);
}

namespace {

std::vector<int> parse_cycles(const std::string& text, const std::string& source,
                              int lineno) {
    std::vector<int> perm = {0, 1, 2, 3, 4};
    if (text == "id" || text == "()") return perm;
    std::vector<int> cycle;
    std::vector<bool> used(5, false);
    bool open = false;
    auto close_cycle = [&] {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            perm[static_cast<std::size_t>(cycle[i])] =
                cycle[(i + 1) % cycle.size()];
        cycle.clear();
    };
    for (char ch : text) {
        if (ch == '(') {
            if (open) throw ParseError(source, lineno, "nested cycle in permutation");
            open = true;
        } else if (ch == ')') {
            if (!open) throw ParseError(source, lineno, "unbalanced cycle parentheses");
            close_cycle();
            open = false;
        } else if (ch >= '1' && ch <= '5') {
            if (!open) throw ParseError(source, lineno, "digit outside a cycle");
            if (used[static_cast<std::size_t>(ch - '1')])
                throw ParseError(source, lineno, "cycles repeat a vertex");
            used[static_cast<std::size_t>(ch - '1')] = true;
            cycle.push_back(ch - '1');
        } else if (ch != ' ' && ch != ',') {
            throw ParseError(source, lineno,
                             std::string("unexpected character in permutation: ") + ch);
        }
    }
    if (open) throw ParseError(source, lineno, "unbalanced cycle parentheses");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{0, 1, 2, 3, 4})
        throw ParseError(source, lineno, "cycles repeat a vertex");
    return perm;
}

}  // namespace

MutationSpec parse_mutation(std::istream& in, const Colouring& c,
                            const std::string& source) {
    std::string line;
    int lineno = 0;
    std::vector<int> cut_facets;
    std::map<int, FacetPairing> pairings;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        if (tokens.front() == "cut") {
            if (tokens.size() != 3 || !cut_facets.empty())
                throw ParseError(source, lineno, "expected a single `cut <id> <id>` line");
            for (int i = 1; i <= 2; ++i) {
                int f = c.polytope().facet_index(tokens[static_cast<std::size_t>(i)]);
                if (f < 0)
                    throw ParseError(source, lineno,
                                     "unknown facet id: " + tokens[static_cast<std::size_t>(i)]);
                cut_facets.push_back(f);
            }
            if (cut_facets[0] == cut_facets[1] ||
                c.polytope().adjacent(cut_facets[0], cut_facets[1]))
                throw ParseError(source, lineno,
                                 "cut facets must be distinct and disjoint");
        } else if (tokens.front() == "pairing") {
            if (cut_facets.empty())
                throw ParseError(source, lineno, "`pairing` must follow `cut`");
            if (tokens.size() != 4)
                throw ParseError(source, lineno,
                                 "expected `pairing <id> perm=<cycles> trans=<bits>`");
            int f = c.polytope().facet_index(tokens[1]);
            if (f != cut_facets[0] && f != cut_facets[1])
                throw ParseError(source, lineno, "pairing facet is not a cut facet");
            if (pairings.contains(f))
                throw ParseError(source, lineno, "duplicate pairing for facet " + tokens[1]);
            if (!tokens[2].starts_with("perm=") || !tokens[3].starts_with("trans="))
                throw ParseError(source, lineno, "expected perm=... trans=...");
            FacetPairing pairing;
            pairing.facet = f;
            pairing.vertex_perm = parse_cycles(tokens[2].substr(5), source, lineno);
            try {
                pairing.translation_rep = GF2Vector::from_string(tokens[3].substr(6));
            } catch (const std::invalid_argument& e) {
                throw ParseError(source, lineno, e.what());
            }
            if (pairing.translation_rep.dim() != c.s())
                throw ParseError(source, lineno, "translation length differs from dim");
            pairings.emplace(f, std::move(pairing));
        } else {
            throw ParseError(source, lineno, "unknown directive: " + tokens.front());
        }
    }
    if (cut_facets.size() != 2) throw ParseError(source, lineno, "missing `cut` line");
    for (int f : cut_facets)
        if (!pairings.contains(f))
            throw ParseError(source, lineno,
                             "missing pairing for facet " + c.polytope().facet_id(f));
    return MutationSpec{pairings.at(cut_facets[0]), pairings.at(cut_facets[1])};
}

MutationSpec load_mutation(const std::string& path, const Colouring& c) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_mutation(in, c, path);
}

json check_report(const Colouring& c, bool require_orientable) {
    ProperVerdict v = check_proper(c);
    auto witness = orientability_witness(c);
    json j{{"version", kReportVersion},
           {"command", "check"},
           {"polytope", c.polytope().name()},
           {"dim", c.s()},
           {"colours", colours_json(c)},
           {"proper", v.proper},
           {"violations", verdict_json(c, v)},
           {"orientable", witness.has_value()},
           {"orientable_required", require_orientable}};
    j["witness"] = witness ? json(witness->str()) : json();
    j["ok"] = v.proper && (!require_orientable || witness.has_value());
    return j;
}

json analyze_report(const Colouring& c) {
    ProperVerdict v = check_proper(c);
    auto witness = orientability_witness(c);
    json j{{"version", kReportVersion},
           {"command", "analyze"},
           {"polytope", c.polytope().name()},
           {"dim", c.s()},
           {"colours", colours_json(c)},
           {"proper", v.proper},
           {"violations", verdict_json(c, v)},
           {"orientable", witness.has_value()},
           {"copies", c.copy_count()}};
    j["witness"] = witness ? json(witness->str()) : json();
    if (!v.proper) return j;

    DevelopingGraph graph(c);
    const bool is_p4 = c.polytope().name() == "P4";
    if (is_p4) {
        Rational chi = euler_characteristic_p4(c);
        j["euler_characteristic"] = json{{"num", chi.num}, {"den", chi.den}};
        json hyp = json::array();
        for (int f = 0; f < c.polytope().facet_count(); ++f) {
            HypersurfaceReport r = hypersurface_report(c, f);
            ComponentCount oracle = hypersurface_components(graph, f);
            bool two_sided_oracle = two_sided_by_tube(graph, f);
            bool separates_oracle = colour_class_separates_by_cut(graph, f);
            bool agree = oracle.count == r.lift_count &&
                         two_sided_oracle == r.two_sided &&
                         separates_oracle == r.colour_class_separates;
            hyp.push_back(json{{"facet", c.polytope().facet_id(f)},
                               {"lift_count", r.lift_count},
                               {"lift_count_oracle", oracle.count},
                               {"two_sided", r.two_sided},
                               {"two_sided_oracle", two_sided_oracle},
                               {"separating", r.colour_class_separates},
                               {"separating_oracle", separates_oracle},
                               {"agree", agree}});
        }
        j["hypersurfaces"] = hyp;
        json cusps = json::array();
        for (std::size_t w = 0; w < c.polytope().ideal_vertices().size(); ++w) {
            VertexFigureColouring vfc =
                induced_vertex_figure_colouring(c, static_cast<int>(w));
            ComponentCount oracle = cusp_components(graph, static_cast<int>(w));
            json entry{{"vertex", static_cast<int>(w) + 1},
                       {"count", vfc.cusp_count},
                       {"count_oracle", oracle.count},
                       {"copies_each",
                        std::uint64_t{1} << vfc.vertex_span.dim()}};
            bool agree = oracle.count == vfc.cusp_count;
            if (witness) {
                CubeClass cls = classify_cube_colouring(vfc.cube);
                FlatManifoldData flat = box_walk_deck_group(vfc.cube);
                entry["cube_class"] = to_string(cls);
                entry["wolf_type"] = to_string(flat.wolf_type);
                entry["lattice"] = lattice_json(flat.translation_lattice);
                agree = agree && classes_match(cls, flat.wolf_type);
            }
            entry["agree"] = agree;
            cusps.push_back(std::move(entry));
        }
        j["cusps"] = cusps;
        json sections = json::array();
        for (int f = 0; f < c.polytope().facet_count(); ++f) {
            json per_facet = json::array();
            for (const auto& s : hypersurface_cusp_sections(c, f)) {
                json entry{{"vertex", s.vertex + 1},
                           {"count", s.count},
                           {"squares_each", s.squares_each}};
                if (check_proper(s.slice).proper && orientability_witness(s.slice)) {
                    FlatManifoldData flat = box_walk_deck_group(s.slice);
                    entry["lattice"] = lattice_json(flat.translation_lattice);
                }
                per_facet.push_back(std::move(entry));
            }
            sections.push_back(json{{"facet", c.polytope().facet_id(f)},
                                    {"sections", per_facet}});
        }
        j["hypersurface_sections"] = sections;
    } else {
        if (witness) {
            FlatManifoldData flat = box_walk_deck_group(c);
            json gens = json::array();
            for (const auto& g : flat.deck_generators) gens.push_back(isometry_json(g));
            j["flat"] = json{{"volume", flat.volume},
                             {"wolf_type", to_string(flat.wolf_type)},
                             {"point_group_order", flat.point_group_order},
                             {"lattice", lattice_json(flat.translation_lattice)},
                             {"generators", gens}};
            if (c.polytope().name() == "box3") {
                CubeClass cls = classify_cube_colouring(c);
                j["cube_class"] = to_string(cls);
                j["classifier_agrees_with_walk"] = classes_match(cls, flat.wolf_type);
            }
        }
    }
    return j;
}

json mutate_report_json(const Colouring& c, const MutationSpec& spec,
                        const std::string& scenario_name) {
    MutantReport report = mutant_report(c, spec);
    json j{{"version", kReportVersion},
           {"command", "mutate"},
           {"polytope", c.polytope().name()},
           {"dim", c.s()}};
    if (!scenario_name.empty()) j["scenario"] = scenario_name;
    auto pairing_json = [&](const FacetPairing& p) {
        return json{{"facet", c.polytope().facet_id(p.facet)},
                    {"vertex_perm", p.vertex_perm},
                    {"translation_rep", p.translation_rep.str()}};
    };
    j["cut"] = json{{"first", pairing_json(spec.first)},
                    {"second", pairing_json(spec.second)}};
    json boundaries = json::array();
    for (const auto& b : short_cusp_boundaries(c, spec))
        boundaries.push_back(json{{"piece", b.label.str()},
                                  {"towards_first", b.towards_first > 0 ? "+" : "-"},
                                  {"towards_second", b.towards_second > 0 ? "+" : "-"}});
    j["short_boundaries"] = boundaries;
    json cusps = json::array();
    for (const auto& cusp : report.cusps) {
        json pieces = json::array();
        for (const auto& p : cusp.cycle.pieces) pieces.push_back(p.str());
        json gens = json::array();
        for (const auto& g : cusp.generators) gens.push_back(isometry_json(g));
        cusps.push_back(json{{"pieces", pieces},
                             {"fiber_length", cusp.cycle.fiber_length},
                             {"monodromy", affine_json(cusp.cycle.monodromy)},
                             {"monodromy_class", to_string(cusp.cycle.monodromy_class)},
                             {"wolf_type", to_string(cusp.type)},
                             {"slice_lattice", lattice_json(cusp.slice_lattice)},
                             {"z_period", cusp.z_period},
                             {"generators", gens}});
    }
    j["cusps"] = cusps;
    j["cusp_count"] = report.cusps.size();
    j["euler_characteristic"] = json{{"num", report.euler_characteristic.num},
                                     {"den", report.euler_characteristic.den}};
    j["total_fiber_length"] = report.total_fiber_length;
    // The a/b sub-labels name the side of the first cut's hypersurface the
    // piece touches through its positive boundary: 'a' for the base-copy side.
    j["short_label_convention"] =
        "a: base-copy side of the first cut; +: base-copy cusp component";
    return j;
}

json enumerate_report(const EnumerateRequest& request) {
    PolytopePtr polytope = build_polytope(request.polytope);
    EnumerationOptions options;
    options.orientable_only = request.orientable_only;
    options.max_classes = request.max_classes;
    EnumerationResult result =
        enumerate_proper_colourings(polytope, request.dim, options);
    json j{{"version", kReportVersion},
           {"command", "enumerate"},
           {"polytope", polytope->name()},
           {"dim", request.dim},
           {"orientable_only", request.orientable_only},
           {"single_cusp", request.single_cusp},
           {"capped", result.capped}};
    json classes = json::array();
    for (const auto& c : result.classes) {
        bool orientable = orientability_witness(c).has_value();
        if (request.single_cusp && polytope->name() == "P4" &&
            total_cusp_count(c) != 1)
            continue;
        json entry{{"colours", colours_json(c)},
                   {"copies", c.copy_count()},
                   {"orientable", orientable}};
        if (polytope->name() == "P4") {
            entry["cusp_total"] = total_cusp_count(c);
            Rational chi = euler_characteristic_p4(c);
            entry["euler_characteristic"] = json{{"num", chi.num}, {"den", chi.den}};
        } else if (orientable) {
            FlatManifoldData flat = box_walk_deck_group(c);
            entry["wolf_type"] = to_string(flat.wolf_type);
            entry["volume"] = flat.volume;
            if (polytope->name() == "box3") {
                CubeClass cls = classify_cube_colouring(c);
                entry["cube_class"] = to_string(cls);
                entry["classifier_agrees_with_walk"] =
                    classes_match(cls, flat.wolf_type);
            }
        }
        classes.push_back(std::move(entry));
    }
    j["class_count"] = classes.size();
    j["classes"] = std::move(classes);
    return j;
}

namespace {

void render_lattice(std::ostream& out, const json& lattice) {
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        out << (i ? " " : "");
        out << "(";
        for (std::size_t k = 0; k < lattice[i].size(); ++k)
            out << (k ? "," : "") << lattice[i][k].get<long long>();
        out << ")";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream out;
    const std::string command = report.value("command", "");
    out << "polycol report v" << report.value("version", "") << "\n";
    out << "polytope: " << report.value("polytope", "") << "   dim: "
        << report.value("dim", 0) << "\n";
    if (command == "check" || command == "analyze") {
        out << "proper: " << (report["proper"].get<bool>() ? "yes" : "no") << "\n";
        if (!report["proper"].get<bool>()) {
            for (const auto& v : report["violations"]["simple_vertices"]) {
                out << "  violated vertex star:";
                for (const auto& f : v["facets"]) out << " " << f.get<std::string>();
                out << "\n";
            }
            for (const auto& e : report["violations"]["ideal_edges"]) {
                out << "  violated ideal edge:";
                for (const auto& f : e["facets"]) out << " " << f.get<std::string>();
                out << "\n";
            }
        }
        out << "orientable: " << (report["orientable"].get<bool>() ? "yes" : "no");
        if (!report["witness"].is_null())
            out << "   witness functional: " << report["witness"].get<std::string>();
        out << "\n";
    }
    if (command == "analyze" && report["proper"].get<bool>()) {
        out << "copies: " << report["copies"].get<std::uint64_t>() << "\n";
        if (report.contains("euler_characteristic"))
            out << "Euler characteristic: "
                << report["euler_characteristic"]["num"].get<long long>() << "/"
                << report["euler_characteristic"]["den"].get<long long>() << "\n";
        if (report.contains("hypersurfaces")) {
            out << "hypersurfaces (formula | oracle):\n";
            for (const auto& h : report["hypersurfaces"])
                out << "  " << h["facet"].get<std::string>() << ": lifts "
                    << h["lift_count"].get<std::uint64_t>() << "|"
                    << h["lift_count_oracle"].get<std::uint64_t>() << ", two-sided "
                    << (h["two_sided"].get<bool>() ? "yes" : "no") << "|"
                    << (h["two_sided_oracle"].get<bool>() ? "yes" : "no")
                    << ", separating "
                    << (h["separating"].get<bool>() ? "yes" : "no") << "|"
                    << (h["separating_oracle"].get<bool>() ? "yes" : "no") << "  "
                    << (h["agree"].get<bool>() ? "AGREE" : "DISAGREE") << "\n";
        }
        if (report.contains("cusps")) {
            out << "cusps (formula | oracle):\n";
            for (const auto& cu : report["cusps"]) {
                out << "  vertex " << cu["vertex"].get<int>() << ": count "
                    << cu["count"].get<std::uint64_t>() << "|"
                    << cu["count_oracle"].get<std::uint64_t>() << ", copies each "
                    << cu["copies_each"].get<std::uint64_t>();
                if (cu.contains("cube_class"))
                    out << ", section " << cu["cube_class"].get<std::string>()
                        << ", walk " << cu["wolf_type"].get<std::string>();
                if (cu.contains("lattice")) {
                    out << ", lattice ";
                    render_lattice(out, cu["lattice"]);
                }
                out << "  " << (cu["agree"].get<bool>() ? "AGREE" : "DISAGREE") << "\n";
            }
        }
        if (report.contains("flat")) {
            const auto& flat = report["flat"];
            out << "flat manifold: volume " << flat["volume"].get<std::uint64_t>()
                << ", type " << flat["wolf_type"].get<std::string>() << ", lattice ";
            render_lattice(out, flat["lattice"]);
            out << "\n";
        }
        if (report.contains("cube_class"))
            out << "cube classifier: " << report["cube_class"].get<std::string>()
                << (report["classifier_agrees_with_walk"].get<bool>() ? " (AGREES)"
                                                                      : " (DISAGREES)")
                << "\n";
    }
    if (command == "mutate") {
        if (report.contains("scenario"))
            out << "scenario: " << report["scenario"].get<std::string>() << "\n";
        out << "cut: " << report["cut"]["first"]["facet"].get<std::string>() << " "
            << report["cut"]["second"]["facet"].get<std::string>() << "\n";
        out << "short piece boundaries (" <<
            report["short_label_convention"].get<std::string>() << "):\n";
        for (const auto& b : report["short_boundaries"])
            out << "  " << b["piece"].get<std::string>() << ": H1"
                << b["towards_first"].get<std::string>() << ", H2"
                << b["towards_second"].get<std::string>() << "\n";
        out << "cusps: " << report["cusp_count"].get<std::size_t>() << "\n";
        for (const auto& cu : report["cusps"]) {
            out << "  cycle:";
            for (const auto& p : cu["pieces"]) out << " " << p.get<std::string>();
            out << "\n    fiber length " << cu["fiber_length"].get<int>()
                << ", monodromy " << cu["monodromy_class"].get<std::string>()
                << ", section " << cu["wolf_type"].get<std::string>()
                << ", slice lattice ";
            render_lattice(out, cu["slice_lattice"]);
            out << ", z period " << cu["z_period"].get<int>() << "\n";
        }
        out << "Euler characteristic: "
            << report["euler_characteristic"]["num"].get<long long>() << "/"
            << report["euler_characteristic"]["den"].get<long long>() << "\n";
    }
    if (command == "enumerate") {
        out << "classes: " << report["class_count"].get<std::size_t>()
            << (report["capped"].get<bool>() ? " (CAPPED, partial)" : "") << "\n";
        for (const auto& entry : report["classes"]) {
            out << " ";
            for (const auto& c : entry["colours"])
                out << " " << c["colour"].get<std::string>();
            out << "  copies " << entry["copies"].get<std::uint64_t>();
            if (entry.contains("cusp_total"))
                out << ", cusps " << entry["cusp_total"].get<std::uint64_t>();
            if (entry.contains("cube_class"))
                out << ", " << entry["cube_class"].get<std::string>();
            else if (entry.contains("wolf_type"))
                out << ", " << entry["wolf_type"].get<std::string>();
            out << (entry["orientable"].get<bool>() ? ", orientable" : "") << "\n";
        }
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"GF(2) colourings of right-angled polytopes: manifold analysis"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string path, spec_path, scenario;
    bool orientable = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "validate a colouring file");
    check->add_option("file", path, "colouring file")->required();
    check->add_flag("--orientable", orientable, "also require orientability");
    add_format(check);

    CLI::App* analyze = app.add_subcommand("analyze", "full census of a colouring");
    analyze->add_option("file", path, "colouring file")->required();
    add_format(analyze);

    CLI::App* mutate = app.add_subcommand("mutate", "cut and re-glue along hypersurfaces");
    mutate->add_option("file", path, "colouring file")->required();
    mutate->add_option("--spec", spec_path, "mutation spec file");
    mutate->add_option("--scenario", scenario, "built-in scenario")
        ->check(CLI::IsMember({"X", "Y"}));
    add_format(mutate);

    EnumerateRequest request;
    CLI::App* enumerate = app.add_subcommand("enumerate", "proper colourings up to equivalence");
    enumerate->add_option("polytope", request.polytope, "box2..box6 or P4")->required();
    enumerate->add_option("--dim", request.dim, "colour dimension")->required();
    enumerate->add_flag("--orientable", request.orientable_only, "orientable classes only");
    enumerate->add_flag("--single-cusp", request.single_cusp, "P4 classes with one cusp");
    enumerate->add_option("--max-classes", request.max_classes, "class cap");
    add_format(enumerate);

    try {
        std::vector<const char*> argv = {"polycol"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const json& report) {
        if (format == "json")
            out << report.dump(2) << "\n";
        else
            out << render_text(report);
    };

    try {
        if (check->parsed()) {
            json report = check_report(load_colouring(path), orientable);
            emit(report);
            return report["ok"].get<bool>() ? 0 : 1;
        }
        if (analyze->parsed()) {
            json report = analyze_report(load_colouring(path));
            emit(report);
            return report["proper"].get<bool>() ? 0 : 1;
        }
        if (mutate->parsed()) {
            Colouring c = load_colouring(path);
            MutationSpec spec = identity_spec();
            if (!scenario.empty() && !spec_path.empty()) {
                err << "give either --spec or --scenario, not both\n";
                return 2;
            }
            if (scenario == "X")
                spec = scenario_x();
            else if (scenario == "Y")
                spec = scenario_y();
            else if (!spec_path.empty())
                spec = load_mutation(spec_path, c);
            else {
                err << "mutate needs --spec or --scenario\n";
                return 2;
            }
            emit(mutate_report_json(c, spec, scenario));
            return 0;
        }
        if (enumerate->parsed()) {
            emit(enumerate_report(request));
            return 0;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace polycol::cli
