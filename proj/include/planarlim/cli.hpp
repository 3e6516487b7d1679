#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "planarlim/bigfloat.hpp"
#include "planarlim/rat.hpp"

namespace planarlim {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

/// Everything a subcommand reads. Identical configurations produce byte-identical output.
struct RunConfig {
    std::string command;
    int weight_cap = 8;
    int t_cap = 6;
    bool oracle = false;     // series: annotate F0 with the map-count oracle
    bool extended = false;   // permit oracle caps up to 10
    long precision_bits = kDefaultPrecisionBits;
    std::string output_path;
    Format format = Format::Json;

    std::string kind;        // extreme, asymptotics
    long fn = 0;             // extreme: print only f_fn
    int n_max = 20;          // extreme: length of the f_n table
    int corrections = 3;     // asymptotics: M
    std::vector<long> n_list{50, 100, 200};

    bool gaussian = false;   // equilibrium
    std::optional<Rat> a2, a4;
    std::vector<std::pair<int, Rat>> couplings;
    std::vector<Rat> poly;
    int samples = 33;

    std::vector<int> criteria;  // verify
};

inline constexpr int kSeriesCapLimit = 20;
inline constexpr int kExtremeTCapLimit = 10;
inline constexpr int kTableLimit = 2000;
inline constexpr int kCorrectionLimit = 6;

/// A request outside a hard limit; the tool exits with status 2.
struct CapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A cross-module consistency check failed; the tool exits with status 1.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The subcommands, each returning its JSON document.
Json cmd_series(const RunConfig& cfg);
Json cmd_extreme(const RunConfig& cfg);
Json cmd_asymptotics(const RunConfig& cfg);
Json cmd_equilibrium(const RunConfig& cfg);
Json cmd_oracle(const RunConfig& cfg);
Json cmd_verify(const RunConfig& cfg);

/// Runs cfg.command and renders it in cfg.format. CSV is available for commands with a table
/// (the f_n table, the asymptotic comparison, the density samples, the oracle counts and the
/// series coefficients).
std::string render(const RunConfig& cfg, const Json& doc);

struct RunOutcome {
    std::string output;  // the rendered document
    std::string error;   // message for standard error when the command could not run
    int exit_code = 0;
};
/// Dispatches, renders and maps errors to exit codes: 0 success, 1 failure (including failed
/// acceptance criteria and consistency errors), 2 cap violations.
RunOutcome run_command(const RunConfig& cfg);

/// Exact value of "p/q", an integer or a finite decimal such as "0.01" or "1e-2".
Rat parse_number(const std::string& text);

/// Decimal digits printed for a given working precision.
int decimal_digits(long bits);

}  // namespace planarlim
