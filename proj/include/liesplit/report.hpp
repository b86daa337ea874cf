#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace liesplit {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

struct RunConfig {
  std::string command;
  int p = 2;
  std::optional<int> e;
  int m = 2;
  int n = 0;
  int cap = 0;
  int target = 0;
  std::vector<int> gens;
  std::vector<int> M;
  std::vector<int> f;  // -1 for no bound
  std::string functor;
  std::string mode = "dims";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  bool dry_run = false;
};

// bad parameters, reported with exit code 2
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& commands();
// throws ConfigError
void validate(const RunConfig& cfg);
nlohmann::json config_json(const RunConfig& cfg);

struct RunOutcome {
  int exit_code = 0;
  nlohmann::json report;
};
// never throws for module or config errors; those land in report["error"]
RunOutcome run(const RunConfig& cfg);

// json, or csv of report["result"]["table"]
std::string render(const nlohmann::json& report, const std::string& format);
nlohmann::json without_timing(nlohmann::json report);

enum class LogLevel { Error, Warn, Info, Debug };
// from LIESPLIT_LOG, default warn
LogLevel log_level();
void log(LogLevel level, const std::string& msg);

}  // namespace liesplit
