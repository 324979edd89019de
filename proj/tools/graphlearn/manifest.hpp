#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

namespace graphlearn::cli {

inline constexpr const char* kToolName = "graphlearn";
inline constexpr const char* kToolVersion = "0.1.0";

/// One manifest per run: the command, the fully resolved configuration
/// (every default materialized), and checksums of every input and output.
/// `wall_s` is a timing field and excluded from reproducibility checks.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::map<std::string, std::string> inputs;   // path -> checksum
  std::map<std::string, std::string> outputs;  // path -> checksum
  double wall_s = 0.0;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);

  /// Atomic write of the JSON rendering.
  void write(const std::filesystem::path& path) const;
  static RunManifest read(const std::filesystem::path& path);
};

}  // namespace graphlearn::cli
