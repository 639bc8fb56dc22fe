#include <doctest.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "germain/modarith.hpp"
#include "germain/search.hpp"
#include "oracles.hpp"

using namespace germain;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const char* tag)
      : path(fs::temp_directory_path() /
             (std::string("germain-test-") + tag + "-" + std::to_string(::getpid()))) {
    std::error_code ec;
    fs::remove(path, ec);
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
    fs::remove(path.string() + ".tmp", ec);
  }
};

std::vector<uint64_t> finding_ps(const ScanResult& res) {
  std::vector<uint64_t> out;
  for (const auto& f : res.findings) out.push_back(f.p);
  return out;
}

}  // namespace

TEST_CASE("wieferich scan reproduces the two known primes") {
  ScanConfig cfg;
  cfg.kind = ScanKind::wieferich;
  cfg.lo = 2;
  cfg.hi = 10'000;
  cfg.workers = 2;
  const ScanResult res = scan(cfg);
  CHECK(finding_ps(res) == std::vector<uint64_t>{1093, 3511});
  CHECK(res.report.tested == 1229);  // pi(1e4)
  CHECK(res.report.completed);
  CHECK(res.report.findings_count == 2);
}

TEST_CASE("wieferich scan matches a brute-force oracle below 1e5") {
  ScanConfig cfg;
  cfg.kind = ScanKind::wieferich;
  cfg.lo = 2;
  cfg.hi = 100'000;
  cfg.workers = 3;
  const ScanResult res = scan(cfg);

  std::vector<uint64_t> expect;
  for (uint64_t p : oracle::naive_primes(100'000))
    if (oracle::powmod(2, p - 1, p * p) == 1) expect.push_back(p);
  CHECK(finding_ps(res) == expect);
  CHECK(expect == std::vector<uint64_t>{1093, 3511});
}

TEST_CASE("theorem1 scan is clean and counts pairs") {
  ScanConfig cfg;
  cfg.kind = ScanKind::theorem1;
  cfg.lo = 2;
  cfg.hi = 100;
  const ScanResult res = scan(cfg);
  CHECK(res.findings.empty());
  CHECK(res.report.tested == 4);  // p in {3, 11, 23, 83}

  cfg.hi = 100'000;
  cfg.workers = 4;
  CHECK(scan(cfg).findings.empty());
}

TEST_CASE("near-wieferich scan matches an independent derivation") {
  ScanConfig cfg;
  cfg.kind = ScanKind::near_wieferich;
  cfg.lo = 2;
  cfg.hi = 2'000;
  cfg.near_threshold = 100;
  const ScanResult res = scan(cfg);

  std::vector<Finding> expect;
  for (uint64_t p : oracle::naive_primes(2'000)) {
    if (p == 2) continue;
    const uint64_t p2 = p * p;
    const uint64_t t = oracle::powmod(2, (p - 1) / 2, p2);
    int64_t a;
    if (t % p == 1)
      a = int64_t((t - 1) / p);
    else
      a = int64_t(((t + 1) / p) % p);
    if (uint64_t(a) > p / 2) a -= int64_t(p);
    if (a <= 100 && a >= -100)
      expect.push_back({ScanKind::near_wieferich, p, p, t, a});
  }
  CHECK(res.findings == expect);
  CHECK(!res.findings.empty());  // every prime below ~200 qualifies
}

TEST_CASE("findings re-verify through the reference power route") {
  ScanConfig cfg;
  cfg.kind = ScanKind::near_wieferich;
  cfg.lo = 2;
  cfg.hi = 5'000;
  cfg.near_threshold = 50;
  for (const auto& f : scan(cfg).findings) {
    CHECK(f.q == f.p);
    CHECK(pow_mod(2, (f.p - 1) / 2, f.p * f.p) == f.witness);
  }
}

TEST_CASE("findings are identical across worker counts and chunk widths") {
  ScanConfig base;
  base.kind = ScanKind::wieferich;
  base.lo = 2;
  base.hi = 50'000;
  const ScanResult reference = scan(base);
  REQUIRE(reference.findings.size() == 2);

  for (unsigned workers : {1u, 4u, 16u}) {
    for (uint64_t chunk : {uint64_t(1000), uint64_t(4096), uint64_t(1) << 20}) {
      ScanConfig cfg = base;
      cfg.workers = workers;
      cfg.chunk = chunk;
      const ScanResult res = scan(cfg);
      CHECK(res.findings == reference.findings);
      CHECK(res.report.tested == reference.report.tested);
    }
  }
}

TEST_CASE("checkpoint roundtrip is exact and atomic") {
  TempFile tmp("ckpt");
  const Checkpoint fresh{1, "00ff00ff00ff00ff", 0, 0, 1723300000};
  write_checkpoint(tmp.path, fresh);
  CHECK(read_checkpoint(tmp.path) == fresh);
  CHECK_FALSE(fs::exists(tmp.path.string() + ".tmp"));

  const Checkpoint after{1, "00ff00ff00ff00ff", uint64_t(1) << 20, 3, 1723300042};
  write_checkpoint(tmp.path, after);
  CHECK(read_checkpoint(tmp.path) == after);

  // the on-disk format is the documented single line
  std::ifstream in(tmp.path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "v1 00ff00ff00ff00ff 1048576 3 1723300042");
}

TEST_CASE("malformed checkpoints are rejected") {
  TempFile tmp("bad");
  std::ofstream(tmp.path) << "v2 deadbeef 0 0 0\n";
  CHECK_THROWS_AS(read_checkpoint(tmp.path), std::runtime_error);
  std::ofstream(tmp.path, std::ios::trunc) << "garbage\n";
  CHECK_THROWS_AS(read_checkpoint(tmp.path), std::runtime_error);
}

TEST_CASE("config digest pins the semantic fields") {
  ScanConfig a;
  a.kind = ScanKind::wieferich;
  a.lo = 2;
  a.hi = 100'000;
  ScanConfig b = a;
  CHECK(config_digest(a) == config_digest(b));
  b.workers = 16;
  b.chunk = 999;
  CHECK(config_digest(a) == config_digest(b));  // execution params excluded
  b = a;
  b.hi = 100'001;
  CHECK(config_digest(a) != config_digest(b));
  b = a;
  b.kind = ScanKind::theorem1;
  CHECK(config_digest(a) != config_digest(b));
}

TEST_CASE("a checkpoint written for another range refuses to resume") {
  TempFile tmp("mismatch");
  ScanConfig cfg;
  cfg.kind = ScanKind::wieferich;
  cfg.lo = 2;
  cfg.hi = 20'000;
  cfg.chunk = 4096;
  scan(cfg, tmp.path);
  REQUIRE(fs::exists(tmp.path));

  ScanConfig altered = cfg;
  altered.hi = 30'000;
  CHECK_THROWS_AS(scan(altered, tmp.path), usage_error);
}

TEST_CASE("kill at a chunk boundary and resume reproduces the full run") {
  ScanConfig cfg;
  cfg.kind = ScanKind::near_wieferich;
  cfg.lo = 2;
  cfg.hi = 60'000;
  cfg.chunk = 4096;
  cfg.workers = 4;
  cfg.near_threshold = 30;

  const ScanResult full = scan(cfg);
  REQUIRE(full.report.completed);
  REQUIRE(!full.findings.empty());

  TempFile tmp("resume");
  const ScanResult part1 =
      scan(cfg, tmp.path, {}, [](uint64_t prefix) { return prefix >= 20'000; });
  CHECK_FALSE(part1.report.completed);
  const Checkpoint mid = read_checkpoint(tmp.path);
  CHECK(mid.completed_prefix_end >= 20'000);
  CHECK(mid.completed_prefix_end < cfg.hi);
  CHECK(mid.findings_count == part1.findings.size());

  const ScanResult part2 = scan(cfg, tmp.path);
  CHECK(part2.report.completed);
  CHECK(part2.report.resumed_from == mid.completed_prefix_end);

  std::vector<Finding> stitched = part1.findings;
  stitched.insert(stitched.end(), part2.findings.begin(), part2.findings.end());
  CHECK(stitched == full.findings);
  CHECK(read_checkpoint(tmp.path).findings_count == full.findings.size());

  // resuming a finished scan is a no-op
  const ScanResult again = scan(cfg, tmp.path);
  CHECK(again.findings.empty());
  CHECK(again.report.completed);
}

TEST_CASE("the sink streams findings in ascending order as chunks commit") {
  ScanConfig cfg;
  cfg.kind = ScanKind::near_wieferich;
  cfg.lo = 2;
  cfg.hi = 3'000;
  cfg.chunk = 128;
  cfg.workers = 8;
  cfg.near_threshold = 200;
  std::vector<uint64_t> streamed;
  const ScanResult res = scan(cfg, {}, [&](const Finding& f) { streamed.push_back(f.p); });
  CHECK(streamed == finding_ps(res));
  CHECK(std::is_sorted(streamed.begin(), streamed.end()));
}

TEST_CASE("capacity bounds per scan kind") {
  ScanConfig cfg;
  cfg.kind = ScanKind::theorem1;
  cfg.lo = 2;
  cfg.hi = (uint64_t(1) << 30) + 1;
  CHECK_THROWS_AS(scan(cfg), capacity_error);
  cfg.kind = ScanKind::wieferich;
  CHECK_NOTHROW(scan({ScanKind::wieferich, (uint64_t(1) << 31) - 3, (uint64_t(1) << 31) - 1}));
  cfg.hi = (uint64_t(1) << 31) + 1;
  CHECK_THROWS_AS(scan(cfg), capacity_error);
  cfg.kind = ScanKind::theorem1;
  cfg.hi = 0;
  CHECK_THROWS_AS(scan(cfg), usage_error);
}

TEST_CASE("finding JSON lines carry the pinned keys") {
  const Finding wf{ScanKind::wieferich, 1093, 1093, 1, {}};
  CHECK(to_json_line(wf) == R"({"kind":"wieferich","p":1093,"q":1093,"witness":1})");
  const Finding near{ScanKind::near_wieferich, 13, 13, 90, -6};
  CHECK(to_json_line(near) ==
        R"({"kind":"near_wieferich","p":13,"q":13,"witness":90,"a":-6})");
  const Finding th{ScanKind::theorem1, 11, 23, 1, {}};
  CHECK(to_json_line(th) == R"({"kind":"theorem1","p":11,"q":23,"witness":1})");
}

TEST_CASE("scan kind names roundtrip") {
  CHECK(scan_kind_from_string("theorem1") == ScanKind::theorem1);
  CHECK(scan_kind_from_string("wieferich") == ScanKind::wieferich);
  CHECK(scan_kind_from_string("near-wieferich") == ScanKind::near_wieferich);
  CHECK(scan_kind_from_string("near_wieferich") == ScanKind::near_wieferich);
  CHECK_FALSE(scan_kind_from_string("nope").has_value());
  CHECK(std::string(to_string(ScanKind::theorem1)) == "theorem1");
}
