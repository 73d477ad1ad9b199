#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pks/medium.hpp"
#include "pks/wavepacket.hpp"

namespace pks {

enum class ScenarioKind {
  packet_uncertainty,
  free_evolution,
  observables_report,
  spin_algebra_audit,
  ohmic_decay,
  svea_sweep,
  crosscheck_suite
};

[[nodiscard]] std::string_view to_string(ScenarioKind kind);
[[nodiscard]] std::optional<ScenarioKind> scenario_kind_from_string(std::string_view name);

struct GridSpec {
  int dim = 3;
  std::size_t n = 32;
  double box_length = 2.0 * 3.141592653589793;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::packet_uncertainty;
  GridSpec grid;
  MediumParams medium = MediumParams::natural();
  std::optional<WavePacketSpec> packet;
  std::vector<double> times;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  bool snapshots = false;
  // crosscheck_suite: number of random states per check
  int samples = 3;
  // svea_sweep: damping ratios gamma/omega_bar; times are then read in units
  // of the damping time 1/gamma
  std::vector<double> gamma_ladder{1e-4, 1e-3, 1e-2, 1e-1, 0.5};
  std::optional<double> omega_bar;
  double svea_threshold = 0.1;
  std::vector<std::string> warnings;
};

// One problem found in a configuration document.
struct ConfigIssue {
  std::string path;  // dotted field path, empty for parse errors
  std::string message;
  std::size_t line = 0;  // parse errors only, 1-based
  std::size_t column = 0;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  [[nodiscard]] const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }
  [[nodiscard]] nlohmann::json to_json() const;

 private:
  std::vector<ConfigIssue> issues_;
};

struct ConfigOverrides {
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::uint64_t> seed;
  // `validate` checks a document that may get its directory on the command line.
  bool require_output_dir = true;
};

// Parses a JSON configuration document and checks it completely. Throws
// ConfigError listing every problem.
[[nodiscard]] ScenarioConfig validate_config(std::string_view raw, const ConfigOverrides& overrides = {});

[[nodiscard]] nlohmann::json to_json(const ScenarioConfig& config);

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunResult {
  int exit_code = 0;
  std::vector<ManifestEntry> files;
  std::vector<std::string> warnings;
  nlohmann::json summary;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitFailure = 3;
inline constexpr int kExitChecksFailed = 4;
inline constexpr int kExitLocked = 5;

inline constexpr const char* kLockFileName = ".photon-kspace.lock";
inline constexpr const char* kManifestFileName = "manifest.json";

// Holds the output directory for one run; creation fails if another run
// holds it. The lock file is removed on destruction.
class OutputLock {
 public:
  explicit OutputLock(std::filesystem::path dir);
  ~OutputLock();
  OutputLock(const OutputLock&) = delete;
  OutputLock& operator=(const OutputLock&) = delete;

 private:
  std::filesystem::path lock_path_;
};

class LockError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the configured scenario, writes its artifacts and manifest.json into
// config.output_dir. Throws LockError if the directory is in use.
[[nodiscard]] RunResult run_scenario(const ScenarioConfig& config);

[[nodiscard]] std::string sha256_hex(std::string_view bytes);
[[nodiscard]] std::string sha256_file(const std::filesystem::path& path);

}  // namespace pks
