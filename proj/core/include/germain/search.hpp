#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germain/sieve.hpp"

namespace germain {

enum class ScanKind { theorem1, wieferich, near_wieferich };

const char* to_string(ScanKind kind);
std::optional<ScanKind> scan_kind_from_string(std::string_view s);

struct ScanConfig {
  ScanKind kind = ScanKind::theorem1;
  uint64_t lo = 2;
  uint64_t hi = 0;
  uint64_t chunk = uint64_t(1) << 20;
  unsigned workers = 1;
  int64_t near_threshold = 100;  // |A| bound, near_wieferich only
};

// Largest admissible hi per kind: q^2 = (2p+1)^2 (theorem1) or p^2
// (wieferich kinds) must stay below the 2^62 modulus cap, so p < 2^30
// respectively p < 2^31.
uint64_t scan_hi_cap(ScanKind kind);

struct Finding {
  ScanKind kind;
  uint64_t p;
  uint64_t q;        // modulus base: 2p+1 for theorem1, p otherwise
  uint64_t witness;  // the offending / near-miss residue mod q^2
  std::optional<int64_t> a;  // near-Wieferich A in 2^{(p-1)/2} = +-1 + A*p

  friend bool operator==(const Finding&, const Finding&) = default;
};

// One JSON object per finding, keys kind/p/q/witness and a when present.
std::string to_json_line(const Finding& f);

struct Checkpoint {
  int version = 1;
  std::string config_digest;
  uint64_t completed_prefix_end = 0;
  uint64_t findings_count = 0;
  uint64_t utc_seconds = 0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Stable hash of the fields that determine the result set (kind, lo, hi,
// near_threshold). workers and chunk are execution parameters; findings are
// identical across them, so a resume may change parallelism freely.
std::string config_digest(const ScanConfig& config);

// Single-line format "v1 <digest> <prefix_end> <findings> <utc_seconds>".
// Writes are temp-file + rename, so a crash never leaves a torn file.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::filesystem::path& path);

struct ScanReport {
  ScanKind kind = ScanKind::theorem1;
  uint64_t lo = 0;
  uint64_t hi = 0;
  uint64_t resumed_from = 0;  // == lo on a fresh run
  uint64_t chunks_done = 0;
  uint64_t tested = 0;           // candidates that reached the kind's test
  uint64_t findings_count = 0;   // cumulative, incl. a resumed prefix
  bool completed = false;
  double elapsed_s = 0.0;
};

struct ScanResult {
  std::vector<Finding> findings;  // this run only, ascending p
  ScanReport report;
};

using FindingSink = std::function<void(const Finding&)>;
// Consulted at every committed chunk boundary; return true to stop early.
using StopAtBoundary = std::function<bool(uint64_t prefix_end)>;

// Chunked parallel range scan over p in [lo, hi):
//   theorem1:       Sophie Germain p = 3 mod 4, finding iff 2^p = 1 (mod q^2);
//   wieferich:      prime p, finding iff 2^{p-1} = 1 (mod p^2);
//   near_wieferich: odd prime p with 2^{(p-1)/2} = +-1 + A*p (mod p^2),
//                   |A| <= near_threshold.
// Findings are delivered in ascending p regardless of worker completion
// order. With a checkpoint path the scan resumes from the completed prefix
// and refuses a file whose digest does not match the config.
ScanResult scan(const ScanConfig& config,
                const std::optional<std::filesystem::path>& checkpoint_path = {},
                const FindingSink& sink = {},
                const StopAtBoundary& stop = {});

}  // namespace germain
