#include "romlab/manifest.hpp"

#include <json.hpp>

#include "romlab/version.hpp"

namespace romlab {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const RunManifest& m) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "manifest";
  j["tool"] = {{"name", m.tool_name}, {"version", m.tool_version}};
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["params"] = ordered_json::parse(m.params_json);
  j["config_hash"] = m.config_hash;
  j["wall_time_s"] = m.wall_time_s;
  ordered_json outs = ordered_json::array();
  for (const auto& o : m.outputs) {
    outs.push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  }
  j["outputs"] = std::move(outs);
  return j.dump(2);
}

RunManifest manifest_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  RunManifest m;
  m.tool_name = j.at("tool").at("name").get<std::string>();
  m.tool_version = j.at("tool").at("version").get<std::string>();
  m.command = j.at("command").get<std::string>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.params_json = j.at("params").dump();
  m.config_hash = j.at("config_hash").get<std::string>();
  m.wall_time_s = j.at("wall_time_s").get<double>();
  for (const auto& o : j.at("outputs")) {
    m.outputs.push_back({o.at("path").get<std::string>(),
                         o.at("sha256").get<std::string>(),
                         o.at("bytes").get<std::uint64_t>()});
  }
  return m;
}

}  // namespace romlab
