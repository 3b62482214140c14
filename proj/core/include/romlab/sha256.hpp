#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace romlab {

/// Incremental SHA-256 (FIPS 180-4). Used for output-file digests in run
/// manifests and cache payload integrity checks.
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(const void* data, std::size_t len);
  /// Finalizes and returns the lowercase hex digest; the object must be
  /// reset() before reuse.
  std::string hex_digest();

  static std::string of(std::string_view data);
  static std::string of_file(const std::string& path);

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t state_[8];
  std::uint64_t bit_count_ = 0;
  std::uint8_t buffer_[64];
  std::size_t buffer_len_ = 0;
};

}  // namespace romlab
