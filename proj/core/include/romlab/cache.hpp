#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "romlab/prime_set.hpp"

namespace romlab {

/// One cached artifact. Sieve payloads are binary bit arrays (bit n of byte
/// n/8, LSB first = little-endian bit order) with a small header recording
/// the format version and limit; the index keeps a SHA-256 of the payload
/// and entries failing verification are reported invalid and ignored.
struct CacheEntry {
  std::string kind;     // "sieve" | "factorization-table"
  std::string key;      // sieve: the decimal limit
  int format_version = 0;
  std::string payload;  // path relative to the cache directory
  std::string digest;   // sha256 of the payload file
  bool valid = true;    // false when integrity verification failed
};

/// Directory-backed cache. The directory comes from ROMLAB_CACHE_DIR when
/// set, else $XDG_CACHE_HOME/romlab, else ~/.cache/romlab. Writes are
/// atomic (temp file + rename). All mutating calls throw cache_error when
/// the directory cannot be created or written.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path dir);
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  /// Entries from the index, with integrity verified against payloads.
  std::vector<CacheEntry> list() const;

  /// Removes every entry and payload.
  void clear();

  /// Builds (or re-reads) a sieve up to `limit` and persists it.
  void warm_sieve(std::uint64_t limit);

  /// Loads a cached sieve if present and intact; byte-identical to
  /// recomputation by construction of the format.
  std::optional<PrimeSet> load_sieve(std::uint64_t limit) const;

 private:
  void write_index(const std::vector<CacheEntry>& entries) const;
  std::vector<CacheEntry> read_index() const;

  std::filesystem::path dir_;
};

}  // namespace romlab
