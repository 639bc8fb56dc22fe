#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "germain/bernoulli.hpp"
#include "germain/search.hpp"
#include "germain/sieve.hpp"
#include "germain/structure.hpp"
#include "germain/verify.hpp"

namespace germain::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

ordered_json report_json(const CheckReport& rep) {
  ordered_json j;
  j["check"] = rep.check;
  j["instance"] = rep.instance;
  j["passed"] = rep.passed;
  j["skipped"] = rep.skipped;
  ordered_json w = ordered_json::object();
  for (const auto& [key, value] : rep.witness) w[key] = value;
  j["witness"] = w;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

struct CheckTally {
  uint64_t checks = 0, passed = 0, failed = 0, skipped = 0;

  void add(const CheckReport& rep) {
    ++checks;
    if (rep.skipped)
      ++skipped;
    else if (rep.passed)
      ++passed;
    else
      ++failed;
    emit(report_json(rep));
  }

  void add(const std::vector<CheckReport>& reps) {
    for (const auto& r : reps) add(r);
  }

  ordered_json summary(const std::string& what, const std::string& target) const {
    ordered_json j;
    j["summary"] = what;
    j["target"] = target;
    j["checks"] = checks;
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    return j;
  }
};

unsigned resolve_workers(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("GERMAIN_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return unsigned(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

int run_sieve(uint64_t lo, uint64_t hi, bool sg, std::optional<unsigned> mod4) {
  uint64_t count = 0;
  if (sg) {
    sophie_germain_pairs({lo, hi}, mod4, [&](const SophieGermainPair& pair) {
      ++count;
      ordered_json j;
      j["p"] = pair.p;
      j["q"] = pair.q;
      j["p_mod_4"] = pair.p_mod_4;
      emit(j);
    });
  } else {
    primes_in_range({lo, hi}, [&](uint64_t p) {
      ++count;
      ordered_json j;
      j["p"] = p;
      emit(j);
    });
  }
  ordered_json s;
  s["summary"] = "sieve";
  s["lo"] = lo;
  s["hi"] = hi;
  s["count"] = count;
  emit(s);
  std::cerr << "sieve [" << lo << ", " << hi << "): " << count
            << (sg ? " Sophie Germain pairs\n" : " primes\n");
  return kOk;
}

int run_order(uint64_t base, uint64_t modulus) {
  const FactoredInteger fm = factorize(modulus);
  const uint64_t phi = euler_phi(fm);
  const OrderResult res = multiplicative_order(Residue(base, modulus), factorize(phi));
  ordered_json j;
  j["base"] = base;
  j["modulus"] = modulus;
  j["phi"] = phi;
  j["order"] = res.order;
  emit(j);
  ordered_json s;
  s["summary"] = "order";
  s["count"] = 1;
  emit(s);
  std::cerr << "order of " << base << " mod " << modulus << " = " << res.order << "\n";
  return kOk;
}

int run_bernoulli(uint64_t max_index, std::optional<uint64_t> mod_p2) {
  const auto table = bernoulli_table(max_index);
  uint64_t skipped = 0;
  for (const auto& b : table) {
    ordered_json j;
    j["index"] = b.index;
    if (!mod_p2) {
      j["value"] = b.value.get_str();
    } else {
      try {
        const Residue r = bernoulli_mod_p2(b, *mod_p2);
        j["residue"] = r.value();
        j["modulus"] = r.modulus();
      } catch (const irregular_reduction&) {
        ++skipped;
        j["skipped"] = "irregular reduction";
      }
    }
    emit(j);
  }
  ordered_json s;
  s["summary"] = "bernoulli";
  s["max_index"] = max_index;
  s["count"] = table.size();
  s["skipped"] = skipped;
  emit(s);
  std::cerr << "bernoulli table through B_" << max_index
            << (mod_p2 ? " reduced mod p^2, p=" + std::to_string(*mod_p2) : std::string()) << "\n";
  return kOk;
}

int run_verify_lemma(const std::string& lemma, uint64_t trials, uint64_t seed,
                     std::optional<uint64_t> q, uint64_t qmax, uint64_t bound, uint64_t pmax,
                     uint64_t numax) {
  CheckTally tally;
  if (lemma == "orders") {
    tally.add(check_order_laws(trials, seed));
  } else if (lemma == "bw") {
    if (q) {
      tally.add(check_lemma_bw(*q, bound));
    } else {
      for (uint64_t c = 3; c <= qmax; c += 2)
        if (is_prime(c)) tally.add(check_lemma_bw(c, bound));
    }
  } else if (lemma == "hw") {
    primes_in_range({11, pmax + 1}, [&](uint64_t p) {
      if (p % 4 == 3) tally.add(check_lemma_hw(p));
    });
  } else if (lemma == "mf" || lemma == "vl") {
    primes_in_range({3, pmax + 1}, [&](uint64_t p) {
      if (p == 2) return;
      for (int r : {2, 3})
        tally.add(lemma == "mf" ? check_lemma_mf(p, r) : check_lemma_vl(p, r));
    });
  } else {  // el
    const auto table = bernoulli_table(numax);
    primes_in_range({3, pmax + 1}, [&](uint64_t p) {
      if (p == 2) return;
      for (uint64_t nu = 2; nu <= numax; ++nu) {
        if ((nu - 1) % (p - 1) == 0) continue;  // outside the lemma's hypothesis
        tally.add(check_lemma_el(p, nu, table));
      }
    });
  }
  emit(tally.summary("verify-lemma", lemma));
  std::cerr << "verify-lemma " << lemma << ": " << tally.passed << " passed, " << tally.failed
            << " failed, " << tally.skipped << " skipped\n";
  return exit_for_checks(tally.failed);
}

int run_check(const std::string& target, std::optional<uint64_t> p, std::optional<uint64_t> limit) {
  std::vector<SophieGermainPair> pairs;
  if (p) {
    const uint64_t q = 2 * *p + 1;
    if (!is_prime(*p) || !is_prime(q))
      throw usage_error("check: --p must be a Sophie Germain prime (2p+1 prime)");
    pairs.push_back({*p, q, unsigned(*p & 3)});
  } else {
    sophie_germain_pairs({2, *limit}, 3u,
                         [&](const SophieGermainPair& pair) { pairs.push_back(pair); });
  }

  CheckTally tally;
  for (const auto& pair : pairs) {
    if (target == "theorem1")
      tally.add(check_theorem1(pair));
    else if (target == "theorem2")
      tally.add(check_theorem2(pair));
    else
      tally.add(check_proof_identities(pair));
  }
  emit(tally.summary("check", target));
  std::cerr << "check " << target << " over " << pairs.size() << " pair(s): " << tally.passed
            << " passed, " << tally.failed << " failed\n";
  return exit_for_checks(tally.failed);
}

int run_scan(const std::string& kind_name, uint64_t lo, uint64_t hi, uint64_t chunk,
             unsigned workers, std::optional<std::string> checkpoint, int64_t near_threshold) {
  ScanConfig config;
  config.kind = *scan_kind_from_string(kind_name);
  config.lo = lo;
  config.hi = hi;
  config.chunk = chunk;
  config.workers = resolve_workers(workers);
  config.near_threshold = near_threshold;

  std::optional<std::filesystem::path> path;
  if (checkpoint) path = *checkpoint;

  const ScanResult res =
      scan(config, path, [](const Finding& f) { std::cout << to_json_line(f) << "\n"; });

  ordered_json s;
  s["summary"] = "scan";
  s["kind"] = to_string(config.kind);
  s["lo"] = res.report.lo;
  s["hi"] = res.report.hi;
  s["resumed_from"] = res.report.resumed_from;
  s["tested"] = res.report.tested;
  s["findings"] = res.report.findings_count;
  s["completed"] = res.report.completed;
  emit(s);
  std::cerr << "scan " << to_string(config.kind) << " [" << res.report.lo << ", " << res.report.hi
            << "): " << res.report.tested << " tested, " << res.report.findings_count
            << " findings, " << res.report.elapsed_s << "s (" << config.workers << " workers)\n";
  return exit_for_scan(config.kind == ScanKind::theorem1, res.findings.size());
}

}  // namespace

int exit_for_checks(uint64_t failed) { return failed ? kViolation : kOk; }

int exit_for_scan(bool theorem1_kind, uint64_t findings) {
  return theorem1_kind && findings ? kViolation : kOk;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"germain: verification and search for Wieferich conditions on safe primes"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized suites");

  // sieve
  auto* sieve_cmd = app.add_subcommand("sieve", "List primes or Sophie Germain pairs");
  uint64_t sv_lo = 2, sv_hi = 0;
  bool sv_sg = false;
  unsigned sv_mod4 = 0;
  sieve_cmd->add_option("--lo", sv_lo, "Range start (inclusive)");
  sieve_cmd->add_option("--hi", sv_hi, "Range end (exclusive)")->required();
  auto* sg_flag = sieve_cmd->add_flag("--sg", sv_sg, "Emit Sophie Germain pairs instead of primes");
  sieve_cmd->add_option("--mod4", sv_mod4, "Restrict pairs to p mod 4 in {1,3}")
      ->check(CLI::IsMember({1u, 3u}))
      ->needs(sg_flag);

  // order
  auto* order_cmd = app.add_subcommand("order", "Multiplicative order of an element");
  uint64_t od_base = 0, od_modulus = 0;
  order_cmd->add_option("--base", od_base, "Element")->required();
  order_cmd->add_option("--modulus", od_modulus, "Modulus")->required();

  // bernoulli
  auto* bern_cmd = app.add_subcommand("bernoulli", "Exact or reduced Bernoulli numbers");
  uint64_t bn_max = 0;
  uint64_t bn_p = 0;
  bern_cmd->add_option("--max", bn_max, "Largest index")->required();
  auto* bn_p_opt = bern_cmd->add_option("--mod-p2", bn_p, "Reduce each value mod p^2");

  // verify-lemma
  auto* verify_cmd = app.add_subcommand("verify-lemma", "Run one lemma suite");
  std::string vl_name;
  uint64_t vl_trials = 10000, vl_qmax = 61, vl_bound = 1'000'000, vl_pmax = 0, vl_numax = 40;
  uint64_t vl_q = 0;
  verify_cmd->add_option("lemma", vl_name, "One of orders|bw|hw|mf|vl|el")
      ->required()
      ->check(CLI::IsMember({"orders", "bw", "hw", "mf", "vl", "el"}));
  verify_cmd->add_option("--trials", vl_trials, "Random trials (orders)");
  auto* vl_q_opt = verify_cmd->add_option("--q", vl_q, "Single exponent q (bw)");
  verify_cmd->add_option("--qmax", vl_qmax, "Largest exponent q (bw)");
  verify_cmd->add_option("--bound", vl_bound, "Divisor search bound (bw)");
  verify_cmd->add_option("--pmax", vl_pmax, "Largest prime p (hw/mf/vl/el)");
  verify_cmd->add_option("--numax", vl_numax, "Largest index nu (el)");

  // check
  auto* check_cmd = app.add_subcommand("check", "Theorem and proof-identity checkers");
  std::string ck_target;
  uint64_t ck_p = 0, ck_limit = 0;
  check_cmd->add_option("target", ck_target, "One of theorem1|theorem2|proofs")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "proofs"}));
  auto* ck_p_opt = check_cmd->add_option("--p", ck_p, "Single Sophie Germain prime p = 3 mod 4");
  auto* ck_limit_opt =
      check_cmd->add_option("--limit", ck_limit, "Check every qualifying pair with p below N");
  ck_p_opt->excludes(ck_limit_opt);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Parallel range scan");
  std::string sc_kind;
  uint64_t sc_lo = 2, sc_hi = 0, sc_chunk = uint64_t(1) << 20;
  unsigned sc_workers = 0;
  int64_t sc_near = 100;
  std::string sc_checkpoint;
  scan_cmd->add_option("kind", sc_kind, "One of theorem1|wieferich|near-wieferich")
      ->required()
      ->check(CLI::IsMember({"theorem1", "wieferich", "near-wieferich"}));
  scan_cmd->add_option("--lo", sc_lo, "Range start (inclusive)");
  scan_cmd->add_option("--hi", sc_hi, "Range end (exclusive)")->required();
  scan_cmd->add_option("--workers", sc_workers,
                       "Worker threads (default: GERMAIN_WORKERS or hardware)");
  scan_cmd->add_option("--chunk", sc_chunk, "Chunk width");
  auto* sc_cp_opt =
      scan_cmd->add_option("--checkpoint", sc_checkpoint, "Checkpoint file (resume if present)");
  scan_cmd->add_option("--near-threshold", sc_near, "|A| bound (near-wieferich)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(sieve_cmd))
      return run_sieve(sv_lo, sv_hi, sv_sg,
                       sieve_cmd->count("--mod4") ? std::optional<unsigned>(sv_mod4) : std::nullopt);
    if (app.got_subcommand(order_cmd)) return run_order(od_base, od_modulus);
    if (app.got_subcommand(bern_cmd))
      return run_bernoulli(bn_max, bn_p_opt->count() ? std::optional<uint64_t>(bn_p) : std::nullopt);
    if (app.got_subcommand(verify_cmd)) {
      if (vl_pmax == 0) vl_pmax = (vl_name == "el") ? 311 : (vl_name == "hw") ? 100'000 : 199;
      return run_verify_lemma(vl_name, vl_trials, seed,
                              vl_q_opt->count() ? std::optional<uint64_t>(vl_q) : std::nullopt,
                              vl_qmax, vl_bound, vl_pmax, vl_numax);
    }
    if (app.got_subcommand(check_cmd)) {
      if (!ck_p_opt->count() && !ck_limit_opt->count())
        throw usage_error("check: one of --p or --limit is required");
      return run_check(ck_target, ck_p_opt->count() ? std::optional<uint64_t>(ck_p) : std::nullopt,
                       ck_limit_opt->count() ? std::optional<uint64_t>(ck_limit) : std::nullopt);
    }
    if (app.got_subcommand(scan_cmd))
      return run_scan(sc_kind, sc_lo, sc_hi, sc_chunk, sc_workers,
                      sc_cp_opt->count() ? std::optional<std::string>(sc_checkpoint) : std::nullopt,
                      sc_near);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}

}  // namespace germain::cli
