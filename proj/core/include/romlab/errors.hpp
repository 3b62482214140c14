#pragma once

#include <stdexcept>
#include <string>

namespace romlab {

/// Thrown when an exact computation would exceed its configured resource
/// budget (breakpoint enumeration, floor-power sequence length, ...).
/// The message names the violated contract and, where useful, a fallback.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the on-disk cache layer when the cache directory cannot be
/// created or written.
class cache_error : public std::runtime_error {
 public:
  explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace romlab
