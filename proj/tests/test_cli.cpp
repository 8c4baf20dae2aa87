#include <doctest.h>

#include <fstream>
#include <sstream>

#include "polycol/cli.hpp"
#include "polycol/mutation.hpp"

using namespace polycol;
using nlohmann::json;

namespace {

Colouring parse(const std::string& text) {
    std::istringstream in(text);
    return cli::parse_colouring(in, "test");
}

const std::string kSymmetric =
    "# comment\n"
    "polytope P4\n"
    "dim 5\n"
    "\n"
    "12 00111\n13 01011\n14 01101\n15 01110\n23 10011\n"
    "24 10101\n25 10110\n34 11001\n35 11010\n45 11100\n";

const std::string kCube =
    "polytope box3\ndim 3\n"
    "x0 001\nx1 111\ny0 010\ny1 010\nz0 100\nz1 100\n";

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

}  // namespace

TEST_CASE("colouring files parse into the declared assignment") {
    Colouring c = parse(kSymmetric);
    CHECK(c.polytope().name() == "P4");
    CHECK(c.s() == 5);
    CHECK(c.colour(c.polytope().facet_index("45")).str() == "11100");
    CHECK(c == symmetric_colouring());
}

TEST_CASE("colouring parse errors carry the source line") {
    auto message = [](const std::string& text) {
        try {
            parse(text);
        } catch (const cli::ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("dim 3\n").find("polytope") != std::string::npos);
    CHECK(message("polytope box3\nx0 100\n").find("test:2") != std::string::npos);
    CHECK(message("polytope box3\ndim 3\nw0 100\n").find("unknown facet") !=
          std::string::npos);
    CHECK(message("polytope box3\ndim 3\nx0 1000\n").find("length") !=
          std::string::npos);
    CHECK(message("polytope box3\ndim 3\nx0 100\nx0 100\n").find("twice") !=
          std::string::npos);
    CHECK(message("polytope box3\ndim 3\nx0 100\n").find("not coloured") !=
          std::string::npos);
    CHECK(message("polytope nope\ndim 3\n") != "no error");
    CHECK(message("polytope box3\ndim 0\n") != "no error");
}

TEST_CASE("mutation files parse cycles and translations") {
    Colouring c = symmetric_colouring();
    std::istringstream in(
        "cut 45 12\n"
        "pairing 45 perm=(123)(45) trans=01101\n"
        "pairing 12 perm=(345) trans=00000\n");
    MutationSpec spec = cli::parse_mutation(in, c, "test");
    MutationSpec expect = scenario_x();
    CHECK(spec.first.facet == expect.first.facet);
    CHECK(spec.first.vertex_perm == expect.first.vertex_perm);
    CHECK(spec.first.translation_rep == expect.first.translation_rep);
    CHECK(spec.second.facet == expect.second.facet);
    CHECK(spec.second.vertex_perm == expect.second.vertex_perm);

    std::istringstream id(
        "cut 45 12\npairing 45 perm=id trans=00000\npairing 12 perm=() trans=00000\n");
    MutationSpec trivial = cli::parse_mutation(id, c, "test");
    CHECK(trivial.first.vertex_perm == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(trivial.second.vertex_perm == std::vector<int>{0, 1, 2, 3, 4});

    auto bad = [&](const std::string& text) {
        std::istringstream s(text);
        CHECK_THROWS_AS(cli::parse_mutation(s, c, "test"), cli::ParseError);
    };
    bad("pairing 45 perm=id trans=00000\n");
    // Intersecting facets are not a valid cut.
    bad("cut 45 15\npairing 45 perm=id trans=00000\npairing 15 perm=id trans=00000\n");
    bad("cut 45 12\npairing 45 perm=(16) trans=00000\npairing 12 perm=id trans=00000\n");
    bad("cut 45 12\npairing 45 perm=(11) trans=00000\npairing 12 perm=id trans=00000\n");
    bad("cut 45 12\npairing 45 perm=id trans=0000\npairing 12 perm=id trans=00000\n");
    bad("cut 45 12\npairing 45 perm=id trans=00000\n");
    bad("cut 45 12\npairing 13 perm=id trans=00000\npairing 12 perm=id trans=00000\n");
}

TEST_CASE("reports serialise to versioned JSON") {
    json check = cli::check_report(symmetric_colouring(), true);
    CHECK(check["version"] == "1.0");
    CHECK(check["proper"] == true);
    CHECK(check["orientable"] == true);
    CHECK(check["witness"] == "11111");
    CHECK(check["ok"] == true);

    json analyze = cli::analyze_report(symmetric_colouring());
    CHECK(analyze["copies"] == 32);
    CHECK(analyze["euler_characteristic"]["num"] == 2);
    CHECK(analyze["hypersurfaces"].size() == 10);
    for (const auto& h : analyze["hypersurfaces"]) CHECK(h["agree"] == true);
    CHECK(analyze["cusps"].size() == 5);
    for (const auto& cu : analyze["cusps"]) {
        CHECK(cu["count"] == 2);
        CHECK(cu["agree"] == true);
    }

    json mutate = cli::mutate_report_json(symmetric_colouring(), scenario_x(), "X");
    CHECK(mutate["scenario"] == "X");
    CHECK(mutate["cusp_count"] == 1);
    CHECK(mutate["cusps"][0]["monodromy_class"] == "HyperellipticInvolution");
    CHECK(mutate["total_fiber_length"] == 20);

    cli::EnumerateRequest request;
    request.polytope = "box3";
    request.dim = 3;
    request.orientable_only = true;
    json enumerate = cli::enumerate_report(request);
    CHECK(enumerate["class_count"] == 2);
    CHECK(enumerate["capped"] == false);

    // Text rendering covers every report type without throwing.
    CHECK(!cli::render_text(check).empty());
    CHECK(!cli::render_text(analyze).empty());
    CHECK(!cli::render_text(mutate).empty());
    CHECK(!cli::render_text(enumerate).empty());
}

TEST_CASE("the command driver maps failures to exit codes") {
    // Valid invocations succeed.
    std::string out;
    CHECK(run({"check", "data/symmetric-p4.col", "--orientable"}, &out) == 0);
    CHECK(run({"analyze", "data/halfturn-cube.col", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["flat"]["volume"] == 8);
    CHECK(run({"mutate", "data/symmetric-p4.col", "--scenario", "Y"}, &out) == 0);
    CHECK(run({"enumerate", "box3", "--dim", "3", "--orientable"}, &out) == 0);

    // A file-based mutation spec matches the built-in scenario.
    std::string from_file, from_scenario;
    CHECK(run({"mutate", "data/symmetric-p4.col", "--spec", "data/scenario-x.mut",
               "--format", "json"}, &from_file) == 0);
    CHECK(run({"mutate", "data/symmetric-p4.col", "--scenario", "X",
               "--format", "json"}, &from_scenario) == 0);
    json a = json::parse(from_file), b = json::parse(from_scenario);
    b.erase("scenario");
    CHECK(a == b);

    // Usage and I/O problems exit 2.
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"check", "no-such-file.col"}) == 2);
    CHECK(run({"enumerate", "box3"}) == 2);  // --dim is required
    CHECK(run({"mutate", "data/symmetric-p4.col"}) == 2);
    CHECK(run({"mutate", "data/symmetric-p4.col", "--scenario", "Z"}) == 2);
    CHECK(run({"check", "data/symmetric-p4.col", "--format", "yaml"}) == 2);

}

TEST_CASE("check exits 1 on improper input") {
    std::ostringstream out, err;
    // Write an improper colouring to a temp file.
    std::string path = "/tmp/polycol-improper.col";
    {
        std::ofstream f(path);
        f << "polytope box3\ndim 3\nx0 100\nx1 100\ny0 010\ny1 010\nz0 110\nz1 001\n";
    }
    CHECK(cli::run({"check", path}, out, err) == 1);
    CHECK(out.str().find("proper: no") != std::string::npos);
}
