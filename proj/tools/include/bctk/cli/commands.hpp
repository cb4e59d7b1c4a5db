#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bctk/cli/literal.hpp"

namespace bctk::cli {

enum class Command { eval, zeta, gamma, roots, unity, toroid, verify, mellin };

enum class OutputFormat { text, json, csv, obj };

struct CommandConfig {
    Command command = Command::eval;
    std::string omega_literal;
    int n = 0;                         // roots / unity / toroid order
    double major_radius = 2.0;
    double minor_radius = 1.0;
    bool check = false;                // unity: print the group checks
    bool use_series = false;           // zeta: partial sum instead of the
                                       // continuation
    long series_terms = 100000;
    bool use_integral = false;         // gamma: quadrature instead of Lanczos
    bool quick = false;                // verify: reduced sweep sizes
    OutputFormat format = OutputFormat::text;
    std::string out_path;              // empty means stdout
    std::optional<double> tolerance;   // verify: overrides BCTK_TOL/defaults
};

/// Executes a parsed command. Exit codes: 0 success, 1 error (parse, domain,
/// config), 2 verify residuals above tolerance.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Full argv front end (CLI11). Same exit codes as run().
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace bctk::cli
