#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycol/colouring.hpp"
#include "polycol/mutation.hpp"

namespace polycol::cli {

inline constexpr const char* kReportVersion = "1.0";

/// Input-file or command-line problem; the driver maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& message);
};

/// Reads a colouring file: `polytope <name>`, `dim <s>`, then one
/// `<facet-id> <bitstring>` line per facet. Blank lines and lines starting
/// with '#' are ignored.
Colouring parse_colouring(std::istream& in, const std::string& source);
Colouring load_colouring(const std::string& path);

/// Reads a mutation file: `cut <facet-id> <facet-id>`, then per cut facet
/// `pairing <facet-id> perm=<cycles> trans=<bitstring>`. Cycles use K5
/// vertex labels, e.g. perm=(123)(45); the translation is an ambient
/// representative of its class modulo the facet colour.
MutationSpec parse_mutation(std::istream& in, const Colouring& c,
                            const std::string& source);
MutationSpec load_mutation(const std::string& path, const Colouring& c);

nlohmann::json check_report(const Colouring& c, bool require_orientable);
nlohmann::json analyze_report(const Colouring& c);
nlohmann::json mutate_report_json(const Colouring& c, const MutationSpec& spec,
                                  const std::string& scenario_name = "");

struct EnumerateRequest {
    std::string polytope;
    int dim = 0;
    bool orientable_only = false;
    bool single_cusp = false;
    std::uint64_t max_classes = 100000;
};
nlohmann::json enumerate_report(const EnumerateRequest& request);

std::string render_text(const nlohmann::json& report);

/// Full command-line driver. Exit codes: 0 success, 1 mathematical failure,
/// 2 I/O or usage failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycol::cli
