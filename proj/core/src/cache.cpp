#include "romlab/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>

#include "romlab/errors.hpp"
#include "romlab/sha256.hpp"
#include "romlab/version.hpp"

namespace romlab {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr char kIndexName[] = "index.json";
constexpr char kSieveMagic[4] = {'R', 'L', 'S', 'V'};

struct SieveHeader {
  char magic[4];
  std::uint32_t version;
  std::uint64_t limit;
};

void write_file_atomic(const fs::path& path, const std::string& bytes) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cache_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw cache_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw cache_error("cannot rename into " + path.string());
}

// Serializes the membership bits as bytes, bit n stored at byte n/8, bit
// position n%8 (LSB first).
std::string sieve_payload(const PrimeSet& ps) {
  SieveHeader hdr{};
  std::memcpy(hdr.magic, kSieveMagic, 4);
  hdr.version = kSieveCacheFormatVersion;
  hdr.limit = ps.limit();

  std::string bytes(sizeof(hdr), '\0');
  std::memcpy(bytes.data(), &hdr, sizeof(hdr));
  const auto words = ps.words();
  const std::size_t nbytes = (ps.limit() + 8) / 8;
  std::size_t off = bytes.size();
  bytes.resize(off + nbytes, '\0');
  for (std::size_t i = 0; i < nbytes; ++i) {
    bytes[off + i] =
        static_cast<char>((words[i / 8] >> (8 * (i % 8))) & 0xFF);
  }
  return bytes;
}

std::optional<PrimeSet> parse_sieve_payload(const std::string& bytes) {
  if (bytes.size() < sizeof(SieveHeader)) return std::nullopt;
  SieveHeader hdr;
  std::memcpy(&hdr, bytes.data(), sizeof(hdr));
  if (std::memcmp(hdr.magic, kSieveMagic, 4) != 0) return std::nullopt;
  if (hdr.version != static_cast<std::uint32_t>(kSieveCacheFormatVersion)) {
    return std::nullopt;
  }
  const std::size_t nbytes = (hdr.limit + 8) / 8;
  if (bytes.size() != sizeof(hdr) + nbytes) return std::nullopt;
  std::vector<std::uint64_t> words(hdr.limit / 64 + 1, 0);
  for (std::size_t i = 0; i < nbytes; ++i) {
    words[i / 8] |= std::uint64_t(static_cast<unsigned char>(
                        bytes[sizeof(hdr) + i]))
                    << (8 * (i % 8));
  }
  return PrimeSet::from_words(hdr.limit, std::move(words));
}

}  // namespace

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw cache_error("cannot create cache directory " + dir_.string());
  }
}

fs::path CacheStore::default_dir() {
  if (const char* env = std::getenv("ROMLAB_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
    return fs::path(xdg) / "romlab";
  }
  if (const char* home = std::getenv("HOME")) {
    return fs::path(home) / ".cache" / "romlab";
  }
  return fs::temp_directory_path() / "romlab-cache";
}

std::vector<CacheEntry> CacheStore::read_index() const {
  const fs::path idx = dir_ / kIndexName;
  if (!fs::exists(idx)) return {};
  std::ifstream in(idx);
  if (!in) throw cache_error("cannot read " + idx.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return {};  // unreadable index: treat as empty, entries are orphaned
  }
  std::vector<CacheEntry> out;
  for (const auto& e : j.value("entries", ordered_json::array())) {
    out.push_back({e.at("kind").get<std::string>(),
                   e.at("key").get<std::string>(),
                   e.at("format_version").get<int>(),
                   e.at("payload").get<std::string>(),
                   e.at("digest").get<std::string>(), true});
  }
  return out;
}

void CacheStore::write_index(const std::vector<CacheEntry>& entries) const {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) {
    arr.push_back({{"kind", e.kind},
                   {"key", e.key},
                   {"format_version", e.format_version},
                   {"payload", e.payload},
                   {"digest", e.digest}});
  }
  j["entries"] = std::move(arr);
  write_file_atomic(dir_ / kIndexName, j.dump(2) + "\n");
}

std::vector<CacheEntry> CacheStore::list() const {
  std::vector<CacheEntry> entries = read_index();
  for (CacheEntry& e : entries) {
    const fs::path payload = dir_ / e.payload;
    std::error_code ec;
    if (!fs::exists(payload, ec)) {
      e.valid = false;
      continue;
    }
    e.valid = Sha256::of_file(payload.string()) == e.digest;
  }
  return entries;
}

void CacheStore::clear() {
  for (const CacheEntry& e : read_index()) {
    std::error_code ec;
    fs::remove(dir_ / e.payload, ec);
  }
  write_index({});
}

void CacheStore::warm_sieve(std::uint64_t limit) {
  const std::string key = std::to_string(limit);
  for (const CacheEntry& e : list()) {
    if (e.kind == "sieve" && e.key == key && e.valid) return;
  }
  const PrimeSet ps = sieve(limit);
  const std::string payload = sieve_payload(ps);
  const std::string name = "sieve_" + key + ".bits";
  write_file_atomic(dir_ / name, payload);

  std::vector<CacheEntry> entries = read_index();
  std::erase_if(entries, [&](const CacheEntry& e) {
    return e.kind == "sieve" && e.key == key;
  });
  entries.push_back(
      {"sieve", key, kSieveCacheFormatVersion, name, Sha256::of(payload), true});
  write_index(entries);
}

std::optional<PrimeSet> CacheStore::load_sieve(std::uint64_t limit) const {
  const std::string key = std::to_string(limit);
  for (const CacheEntry& e : read_index()) {
    if (e.kind != "sieve" || e.key != key) continue;
    const fs::path payload = dir_ / e.payload;
    std::error_code ec;
    if (!fs::exists(payload, ec)) return std::nullopt;
    std::ifstream in(payload, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    if (Sha256::of(bytes) != e.digest) return std::nullopt;  // corrupt: ignore
    return parse_sieve_payload(bytes);
  }
  return std::nullopt;
}

}  // namespace romlab
