#include "graphlearn/manifest.hpp"

#include "graphlearn/errors.hpp"
#include "graphlearn/io.hpp"

namespace graphlearn::cli {

nlohmann::json RunManifest::to_json() const {
  return nlohmann::json{
      {"tool", kToolName}, {"version", kToolVersion}, {"command", command},
      {"config", config},  {"inputs", inputs},        {"outputs", outputs},
      {"wall_s", wall_s},
  };
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  if (j.value("tool", "") != kToolName) {
    throw DataError("manifest: not a " + std::string(kToolName) + " manifest");
  }
  m.command = j.at("command").get<std::string>();
  m.config = j.at("config");
  m.inputs = j.value("inputs", std::map<std::string, std::string>{});
  m.outputs = j.value("outputs", std::map<std::string, std::string>{});
  m.wall_s = j.value("wall_s", 0.0);
  return m;
}

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs[path.string()] = file_checksum(path);
}

void RunManifest::add_output(const std::filesystem::path& path) {
  outputs[path.string()] = file_checksum(path);
}

void RunManifest::write(const std::filesystem::path& path) const {
  atomic_write_file(path, to_json().dump(2) + "\n");
}

RunManifest RunManifest::read(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("manifest " + path.string() + ": " + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace graphlearn::cli
