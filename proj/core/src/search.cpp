#include "germain/search.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "germain/modarith.hpp"
#include "germain/montgomery.hpp"

namespace germain {

const char* to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::theorem1: return "theorem1";
    case ScanKind::wieferich: return "wieferich";
    case ScanKind::near_wieferich: return "near_wieferich";
  }
  return "unknown";
}

std::optional<ScanKind> scan_kind_from_string(std::string_view s) {
  if (s == "theorem1") return ScanKind::theorem1;
  if (s == "wieferich") return ScanKind::wieferich;
  if (s == "near_wieferich" || s == "near-wieferich") return ScanKind::near_wieferich;
  return std::nullopt;
}

uint64_t scan_hi_cap(ScanKind kind) {
  // theorem1 works mod q^2 = (2p+1)^2, the others mod p^2; both squares must
  // stay below the 2^62 modulus cap.
  return kind == ScanKind::theorem1 ? uint64_t(1) << 30 : uint64_t(1) << 31;
}

std::string to_json_line(const Finding& f) {
  std::string s = "{\"kind\":\"";
  s += to_string(f.kind);
  s += "\",\"p\":" + std::to_string(f.p);
  s += ",\"q\":" + std::to_string(f.q);
  s += ",\"witness\":" + std::to_string(f.witness);
  if (f.a) s += ",\"a\":" + std::to_string(*f.a);
  s += "}";
  return s;
}

namespace {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

}  // namespace

std::string config_digest(const ScanConfig& config) {
  std::string canon = std::string(to_string(config.kind)) + "|" + std::to_string(config.lo) +
                      "|" + std::to_string(config.hi) + "|" +
                      std::to_string(config.near_threshold);
  return hex16(fnv1a64(canon));
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp.string());
    out << "v" << cp.version << " " << cp.config_digest << " " << cp.completed_prefix_end << " "
        << cp.findings_count << " " << cp.utc_seconds << "\n";
    if (!out.flush()) throw std::runtime_error("checkpoint: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);  // atomic on POSIX; never leaves a torn file
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("checkpoint: cannot read " + path.string());
  std::string line;
  std::getline(in, line);
  std::istringstream iss(line);
  std::string version;
  Checkpoint cp;
  if (!(iss >> version >> cp.config_digest >> cp.completed_prefix_end >> cp.findings_count >>
        cp.utc_seconds) ||
      version != "v1")
    throw std::runtime_error("checkpoint: malformed or unsupported file " + path.string());
  cp.version = 1;
  return cp;
}

namespace {

struct ChunkResult {
  std::vector<Finding> findings;
  uint64_t tested = 0;
};

// Signed A with 2^{(p-1)/2} = +-1 + A*p (mod p^2); requires t = +-1 mod p,
// which Euler's criterion guarantees for odd prime p.
int64_t near_a_value(uint64_t t, uint64_t p) {
  uint64_t a0;
  if (t % p == 1) {
    a0 = (t - 1) / p;
  } else {
    a0 = ((t + 1) / p) % p;
  }
  return a0 <= p / 2 ? int64_t(a0) : int64_t(a0) - int64_t(p);
}

ChunkResult scan_chunk(const ScanConfig& config, uint64_t lo, uint64_t hi) {
  ChunkResult res;
  switch (config.kind) {
    case ScanKind::theorem1:
      sophie_germain_pairs({lo, hi}, 3u, [&](const SophieGermainPair& pair) {
        ++res.tested;
        const uint64_t q2 = pair.q * pair.q;
        const uint64_t w = Montgomery(q2).pow(2, pair.p);
        if (w == 1) res.findings.push_back({config.kind, pair.p, pair.q, w, {}});
      });
      break;
    case ScanKind::wieferich:
      for_each_prime(lo, hi, 256 * 1024, [&](uint64_t p) {
        ++res.tested;
        const uint64_t w = p == 2 ? pow_mod(2, 1, 4) : Montgomery(p * p).pow(2, p - 1);
        if (w == 1) res.findings.push_back({config.kind, p, p, w, {}});
      });
      break;
    case ScanKind::near_wieferich:
      for_each_prime(lo, hi, 256 * 1024, [&](uint64_t p) {
        if (p == 2) return;
        ++res.tested;
        const uint64_t w = Montgomery(p * p).pow(2, (p - 1) / 2);
        const int64_t a = near_a_value(w, p);
        if (a <= config.near_threshold && a >= -config.near_threshold)
          res.findings.push_back({config.kind, p, p, w, a});
      });
      break;
  }
  return res;
}

uint64_t now_utc_seconds() {
  return uint64_t(std::chrono::duration_cast<std::chrono::seconds>(
                      std::chrono::system_clock::now().time_since_epoch())
                      .count());
}

}  // namespace

ScanResult scan(const ScanConfig& config,
                const std::optional<std::filesystem::path>& checkpoint_path,
                const FindingSink& sink, const StopAtBoundary& stop) {
  if (config.lo < 2) throw usage_error("scan: lo must be >= 2");
  if (config.hi <= config.lo) throw usage_error("scan: hi must be > lo");
  if (config.chunk == 0) throw usage_error("scan: chunk must be positive");
  if (config.near_threshold < 0) throw usage_error("scan: near_threshold must be >= 0");
  if (config.hi > scan_hi_cap(config.kind))
    throw capacity_error(std::string("scan: hi exceeds the ") + to_string(config.kind) +
                         " capacity bound of 2^" +
                         (config.kind == ScanKind::theorem1 ? "30" : "31"));

  const auto t0 = std::chrono::steady_clock::now();
  const std::string digest = config_digest(config);

  uint64_t start = config.lo;
  uint64_t base_findings = 0;
  if (checkpoint_path && std::filesystem::exists(*checkpoint_path)) {
    const Checkpoint cp = read_checkpoint(*checkpoint_path);
    if (cp.config_digest != digest)
      throw usage_error("scan: checkpoint " + checkpoint_path->string() +
                        " was written for a different scan config; refusing to resume");
    start = std::max(start, cp.completed_prefix_end);
    base_findings = cp.findings_count;
  }

  ScanResult result;
  result.report.kind = config.kind;
  result.report.lo = config.lo;
  result.report.hi = config.hi;
  result.report.resumed_from = start;
  result.report.findings_count = base_findings;

  if (start >= config.hi) {
    result.report.completed = true;
    result.report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  const uint64_t n_chunks = (config.hi - start + config.chunk - 1) / config.chunk;
  const unsigned workers =
      unsigned(std::min<uint64_t>(std::max(1u, config.workers), n_chunks));

  std::mutex mtx;
  std::condition_variable cv;
  std::map<uint64_t, ChunkResult> ready;
  std::atomic<uint64_t> next_chunk{0};
  std::atomic<bool> halt{false};
  std::exception_ptr worker_error;

  const auto worker = [&] {
    try {
      while (!halt.load(std::memory_order_relaxed)) {
        const uint64_t idx = next_chunk.fetch_add(1);
        if (idx >= n_chunks) break;
        const uint64_t c0 = start + idx * config.chunk;
        const uint64_t c1 = std::min(config.hi, c0 + config.chunk);
        ChunkResult res = scan_chunk(config, c0, c1);
        {
          std::lock_guard<std::mutex> lock(mtx);
          ready.emplace(idx, std::move(res));
        }
        cv.notify_one();
      }
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (!worker_error) worker_error = std::current_exception();
        halt.store(true);
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);

  // The calling thread is the collector: it owns ordering, the sink, and all
  // checkpoint writes.
  bool stopped = false;
  {
    std::unique_lock<std::mutex> lock(mtx);
    for (uint64_t idx = 0; idx < n_chunks; ++idx) {
      cv.wait(lock, [&] { return ready.count(idx) != 0 || worker_error; });
      if (worker_error) break;
      ChunkResult res = std::move(ready.at(idx));
      ready.erase(idx);
      lock.unlock();

      const uint64_t prefix_end = std::min(config.hi, start + (idx + 1) * config.chunk);
      result.report.tested += res.tested;
      for (Finding& f : res.findings) {
        if (sink) sink(f);
        result.findings.push_back(std::move(f));
      }
      result.report.findings_count = base_findings + result.findings.size();
      ++result.report.chunks_done;
      if (checkpoint_path)
        write_checkpoint(*checkpoint_path, {1, digest, prefix_end,
                                            result.report.findings_count, now_utc_seconds()});
      if (stop && stop(prefix_end)) {
        stopped = true;
        halt.store(true);
        lock.lock();
        break;
      }
      lock.lock();
    }
  }

  halt.store(true);
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (worker_error) std::rethrow_exception(worker_error);

  result.report.completed = !stopped && result.report.chunks_done == n_chunks;
  result.report.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace germain
