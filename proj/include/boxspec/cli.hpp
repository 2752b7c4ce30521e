#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxspec/factor_domains.hpp"
#include "boxspec/spectrum.hpp"

namespace boxspec::cli {

/// Error carrying a CLI exit code: 2 config/usage, 3 verification failure,
/// 4 unavailable data. pointer locates the offending config field.
struct CliError : std::runtime_error {
    CliError(int code, const std::string& msg, std::string ptr = "")
        : std::runtime_error(msg), exit_code(code), pointer(std::move(ptr)) {}
    int exit_code;
    std::string pointer;
};

struct JobConfig {
    std::vector<PlanarDomain> factors;
    double cutoff = 0.0;
    double merge_tol = kDefaultMergeTol;
    double zero_tol = kDefaultZeroTol;
    std::string format = "json";
};

/// Parse and validate a UTF-8 JSON job configuration, filling defaults.
/// Throws CliError (exit code 2) with a JSON pointer on violations.
JobConfig parse_config(const std::string& text);

struct CommandOptions {
    std::optional<Bidegree> pq;            // bidegree
    std::optional<int> q;                  // enumerate
    std::optional<int> bessel_n, bessel_k; // bessel
    std::optional<double> cutoff;          // overrides config cutoff
    std::optional<std::string> format;     // overrides config format
    std::uint64_t seed = 20240915;         // verify randomization
    std::string suite = "all";             // verify
};

struct CommandResult {
    std::string output;  // report, already formatted for stdout
    int exit_code = 0;
};

/// Dispatch one CLI command. config may be null for bessel/verify.
/// Reports are byte-deterministic for identical inputs: 12 significant
/// digits, "inf" literal for infinite multiplicities.
CommandResult run_command(const std::string& name, const JobConfig* config,
                          const CommandOptions& opts);

/// 12-significant-digit fixed formatting used in every report.
std::string fmt_g12(double v);

}  // namespace boxspec::cli
