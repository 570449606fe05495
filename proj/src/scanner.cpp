#include "lucasres/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include <json.hpp>

#include "lucasres/errors.hpp"
#include "lucasres/modular.hpp"

namespace lucasres {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Primes in [lo, hi] given every prime up to sqrt(hi).
std::vector<std::uint64_t> sieve_segment(const std::vector<std::uint64_t>& base, std::uint64_t lo,
                                         std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  std::vector<bool> composite(hi - lo + 1, false);
  for (std::uint64_t q : base) {
    if (q * q > hi) break;
    std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
    for (std::uint64_t j = start; j <= hi; j += q) {
      composite[j - lo] = true;
      if (j > hi - q) break;
    }
  }
  for (std::uint64_t i = 0; i < composite.size(); ++i)
    if (!composite[i]) out.push_back(lo + i);
  return out;
}

void require_scan_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3 || lo > hi)
    raise(ErrorCode::InvalidArgument,
          "scan range needs 3 <= lo <= hi, got [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (hi > kMaxPrime) raise(ErrorCode::InvalidArgument, "scan range upper bound must be below 2^32");
}

std::optional<std::uint64_t> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<std::uint64_t> last;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      last = to_u64(parse_bigint(line), "checkpoint entry");
    } catch (const Error&) {
      raise(ErrorCode::Io, "malformed checkpoint line in " + path.string() + ": '" + line + "'");
    }
  }
  return last;
}

// Splits [lo, hi] into segments, runs `work` on each segment's primes across
// worker threads and hands the outputs to `commit` in ascending segment order.
template <class Output, class Work, class Commit>
void run_segments(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size, unsigned threads, Work work,
                  Commit commit) {
  if (lo > hi) return;
  if (segment_size == 0) raise(ErrorCode::InvalidArgument, "segment size must be positive");
  const std::vector<std::uint64_t> base = small_primes(isqrt(hi));
  const std::uint64_t count = (hi - lo) / segment_size + 1;

  // Finished segments waiting for their predecessors.
  std::map<std::uint64_t, Output> pending;
  std::atomic<std::uint64_t> next{0};
  std::mutex mutex;
  std::uint64_t committed = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t idx = next.fetch_add(1);
      if (idx >= count) return;
      {
        std::lock_guard lock(mutex);
        if (failure) return;
      }
      const std::uint64_t seg_lo = lo + idx * segment_size;
      const std::uint64_t seg_hi = std::min(hi, seg_lo + (segment_size - 1));
      try {
        Output out = work(sieve_segment(base, seg_lo, seg_hi));
        std::lock_guard lock(mutex);
        pending.emplace(idx, std::move(out));
        for (auto it = pending.find(committed); it != pending.end(); it = pending.find(committed)) {
          commit(std::move(it->second));
          pending.erase(it);
          ++committed;
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  threads = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(threads, count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::optional<std::filesystem::path>& path) {
    if (!path) return;
    out_.open(*path, std::ios::app);
    if (!out_) raise(ErrorCode::Io, "cannot open checkpoint file " + path->string());
  }

  void record(const std::vector<std::uint64_t>& primes) {
    if (!out_.is_open() || primes.empty()) return;
    out_ << primes.back() << '\n';
    out_.flush();
  }

 private:
  std::ofstream out_;
};

std::uint64_t resume_start(const ScanOptions& options, std::uint64_t lo, ScanResult& result) {
  if (!options.checkpoint) return lo;
  const auto last = read_checkpoint(*options.checkpoint);
  if (!last || *last < lo) return lo;
  result.resumed_after = *last;
  return *last + 1;
}

}  // namespace

std::vector<std::uint64_t> prime_stream(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
  if (lo < 2 || hi < lo)
    raise(ErrorCode::InvalidArgument, "prime_stream needs hi >= lo >= 2");
  if (hi > kMaxPrime) raise(ErrorCode::InvalidArgument, "prime_stream upper bound must be below 2^32");
  std::vector<std::uint64_t> out;
  run_segments<std::vector<std::uint64_t>>(
      lo, hi, segment_size, 1, [](std::vector<std::uint64_t> primes) { return primes; },
      [&](std::vector<std::uint64_t> primes) { out.insert(out.end(), primes.begin(), primes.end()); });
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned resolve_threads(unsigned requested) {
  unsigned cap = 0;
  if (const char* env = std::getenv("LUCAS_RESIDUE_THREADS")) {
    try {
      const BigInt v = parse_bigint(env);
      if (v > 0 && fits_u64(v)) cap = static_cast<unsigned>(std::min<std::uint64_t>(v.get_ui(), 1024));
    } catch (const Error&) {
    }
  }
  unsigned n = requested;
  if (n == 0) n = cap != 0 ? cap : std::max(1u, std::thread::hardware_concurrency());
  if (cap != 0) n = std::min(n, cap);
  return std::max(1u, n);
}

std::vector<std::uint64_t> ScanResult::hit_primes() const {
  if (kind == "wall") {
    std::vector<std::uint64_t> out;
    for (const auto& h : wall_hits) out.push_back(h.p);
    return out;
  }
  std::set<std::uint64_t> ps;
  for (const auto* r : failures())
    if (r->p) ps.insert(*r->p);
  return {ps.begin(), ps.end()};
}

std::vector<const CheckReport*> ScanResult::failures() const {
  std::vector<const CheckReport*> out;
  for (const auto& r : reports)
    if (r.outcome() == Outcome::Fail) out.push_back(&r);
  return out;
}

bool wall_condition_exact(const LucasParams& params, std::uint64_t p) {
  require_odd_prime_range(p);
  if (divides(p, params.A())) return false;
  const int eps = lucas_epsilon(params, p);
  if (eps == 0) return false;
  const BigInt u = lucas_pair(params, eps == 1 ? p - 1 : p + 1).u;
  return mpz_divisible_ui_p(u.get_mpz_t(), p * p) != 0;
}

ScanResult wall_scan(const WallJob& job, const ScanOptions& options) {
  require_scan_range(job.lo, job.hi);
  const auto started = std::chrono::steady_clock::now();
  ScanResult result;
  result.kind = "wall";
  result.params = job.params;
  result.lo = job.lo;
  result.hi = job.hi;
  const std::uint64_t start = resume_start(options, job.lo, result);
  CheckpointWriter checkpoint(options.checkpoint);

  struct SegmentOut {
    std::vector<std::uint64_t> primes;
    std::vector<WallHit> hits;
    std::uint64_t skipped = 0;
  };
  const LucasParams& params = job.params;
  run_segments<SegmentOut>(
      start, job.hi, options.segment_size, resolve_threads(options.threads),
      [&](std::vector<std::uint64_t> primes) {
        SegmentOut out;
        for (std::uint64_t p : primes) {
          if (mod_u64(params.A(), p) == 0 || mod_u64(params.D(), p) == 0) {
            ++out.skipped;
            continue;
          }
          const int eps = lucas_epsilon(params, p);
          const auto [u, v] = lucas_pair_mod(params, eps == 1 ? p - 1 : p + 1, p * p);
          if (u.value() == 0) out.hits.push_back({p, eps, wall_condition_exact(params, p)});
        }
        out.primes = std::move(primes);
        return out;
      },
      [&](SegmentOut out) {
        result.counts.primes_scanned += out.primes.size();
        result.counts.skipped += out.skipped;
        result.wall_hits.insert(result.wall_hits.end(), out.hits.begin(), out.hits.end());
        checkpoint.record(out.primes);
      });
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return result;
}

ScanResult verify_sweep(const SweepJob& job, const ScanOptions& options) {
  require_scan_range(job.lo, job.hi);
  const auto started = std::chrono::steady_clock::now();
  ScanResult result;
  result.kind = "sweep";
  result.check = job.check;
  result.a_values = job.a_values;
  result.params = job.settings.params;
  result.lo = job.lo;
  result.hi = job.hi;
  const std::uint64_t start = resume_start(options, job.lo, result);
  CheckpointWriter checkpoint(options.checkpoint);

  const bool a_free = is_a_free(job.check) || (job.check == CheckId::QuotientV && job.settings.params);
  const std::vector<BigInt> a_grid = a_free ? std::vector<BigInt>{BigInt(0)} : job.a_values;

  struct SegmentOut {
    std::vector<std::uint64_t> primes;
    std::vector<CheckReport> reports;
  };
  run_segments<SegmentOut>(
      start, job.hi, options.segment_size, resolve_threads(options.threads),
      [&](std::vector<std::uint64_t> primes) {
        SegmentOut out;
        for (std::uint64_t p : primes)
          for (const BigInt& a : a_grid) {
            auto reports = run_check_point(job.check, p, a, job.settings);
            std::move(reports.begin(), reports.end(), std::back_inserter(out.reports));
          }
        out.primes = std::move(primes);
        return out;
      },
      [&](SegmentOut out) {
        result.counts.primes_scanned += out.primes.size();
        for (auto& r : out.reports) {
          switch (r.outcome()) {
            case Outcome::Pass: ++result.counts.checked; ++result.counts.passed; break;
            case Outcome::Fail: ++result.counts.checked; ++result.counts.failed; break;
            case Outcome::Skipped: ++result.counts.skipped; break;
            case Outcome::Unsatisfiable: ++result.counts.unsatisfiable; break;
          }
          result.reports.push_back(std::move(r));
        }
        checkpoint.record(out.primes);
      });
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return result;
}

std::string summary_json_line(const ScanResult& result, bool include_elapsed) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["type"] = "summary";
  j["kind"] = result.kind;
  if (result.kind == "wall" && result.params) {
    j["A"] = to_string(result.params->A());
    j["B"] = to_string(result.params->B());
  } else {
    j["check"] = result.check ? std::string(check_id_name(*result.check)) : std::string();
    if (result.params) {
      j["A"] = to_string(result.params->A());
      j["B"] = to_string(result.params->B());
    }
    ordered_json as = ordered_json::array();
    for (const auto& a : result.a_values) as.push_back(to_string(a));
    j["a_values"] = std::move(as);
  }
  j["from"] = std::to_string(result.lo);
  j["to"] = std::to_string(result.hi);
  j["resumed_after"] = result.resumed_after ? ordered_json(std::to_string(*result.resumed_after)) : ordered_json(nullptr);
  j["primes_scanned"] = result.counts.primes_scanned;
  j["skipped"] = result.counts.skipped;
  if (result.kind == "wall") {
    j["hits"] = result.wall_hits.size();
  } else {
    j["checked"] = result.counts.checked;
    j["passed"] = result.counts.passed;
    j["failed"] = result.counts.failed;
    j["unsatisfiable"] = result.counts.unsatisfiable;
  }
  if (include_elapsed) j["elapsed_ms"] = result.elapsed.count();
  return j.dump();
}

std::string wall_hit_json_line(const WallHit& hit) {
  nlohmann::ordered_json j;
  j["type"] = "hit";
  j["p"] = std::to_string(hit.p);
  j["epsilon"] = hit.epsilon;
  j["verified_exact"] = hit.verified_exact;
  return j.dump();
}

}  // namespace lucasres
