#pragma once

namespace romlab {

inline constexpr const char* kVersion = "0.1.0";

/// Bumped whenever the JSON report layout or a binary cache format changes.
inline constexpr int kSchemaVersion = 1;
inline constexpr int kSieveCacheFormatVersion = 1;

}  // namespace romlab
