#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scrollkit/binary_curves.hpp"

namespace scrollkit {

using Json = nlohmann::ordered_json;

/// Everything a report depends on. Fields left empty take per-command defaults,
/// which are echoed in the report.
struct ExperimentConfig {
  std::string command;
  std::optional<int> n, d, k, h, node;
  std::optional<std::vector<int>> a;
  /// "q" or "fp:P"
  std::optional<std::string> field;
  std::uint64_t seed = 1;
  std::optional<int> trials;
  std::string format = "json";
  std::optional<std::string> lambda;
  /// BinaryCurve JSON file for the curve commands.
  std::optional<std::string> input;
  bool positive_control = false;
  bool repeat_t = false;
  bool omit_clock = false;
};

/// Bad or missing parameters; the CLI exits non-zero.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

/// {tool, version, versions, command, config, result, anomalies, wall_clock_ms}.
/// Mathematical outcomes (EMPTY, NONE, NO_COPRIME_WITNESS, ...) are part of the
/// result; only invalid configurations throw UsageError.
Json run(const ExperimentConfig& config);

/// json: indented document. csv: the result's row table ("rows" or "trials")
/// if it has one, otherwise flattened key,value pairs. text: aligned summary.
std::string render(const Json& report, const std::string& format);

Json to_json(const BinaryForm& f);
Json to_json(const BinaryCurve& c);
Json to_json(const Quadric& q);
BinaryCurve binary_curve_from_json(const Json& j);

}  // namespace scrollkit
