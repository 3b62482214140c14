#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace romlab {

/// Reproducibility record written next to every CLI report. Two manifests
/// that agree on everything but wall_time_s describe bit-identical
/// exact-mode outputs; the digests make that checkable after the fact.
struct RunManifest {
  std::string tool_name;
  std::string tool_version;
  std::string command;                  // subcommand name
  std::vector<std::string> argv;        // full invocation
  std::string params_json;              // canonicalized parameter object
  std::string config_hash;              // sha256 of params_json
  double wall_time_s = 0.0;
  struct OutputDigest {
    std::string path;
    std::string sha256;
    std::uint64_t bytes = 0;
  };
  std::vector<OutputDigest> outputs;
};

std::string to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

}  // namespace romlab
