#ifndef LUCASRES_SCANNER_HPP
#define LUCASRES_SCANNER_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lucasres/bigint.hpp"
#include "lucasres/lucas.hpp"
#include "lucasres/report.hpp"
#include "lucasres/verify.hpp"

namespace lucasres {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 16;

/// All primes in [lo, hi], ascending, by a segmented sieve.
std::vector<std::uint64_t> prime_stream(std::uint64_t lo, std::uint64_t hi,
                                        std::uint64_t segment_size = kDefaultSegmentSize);

/// Deterministic for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Worker count: `requested` if nonzero, else LUCAS_RESIDUE_THREADS, else the
/// hardware concurrency. The environment value also caps `requested`.
unsigned resolve_threads(unsigned requested);

struct ScanOptions {
  std::uint64_t segment_size = kDefaultSegmentSize;
  unsigned threads = 0;
  /// Appended with the last completed prime after every segment; an existing
  /// file resumes the scan after its last entry.
  std::optional<std::filesystem::path> checkpoint;
};

struct ScanCounts {
  std::uint64_t primes_scanned = 0;
  std::uint64_t skipped = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t unsatisfiable = 0;
};

struct WallHit {
  std::uint64_t p = 0;
  int epsilon = 0;
  /// u_{p-eps} = 0 (mod p^2) reconfirmed by exact evaluation.
  bool verified_exact = false;
};

struct WallJob {
  LucasParams params;
  std::uint64_t lo;
  std::uint64_t hi;
};

struct SweepJob {
  CheckId check;
  std::vector<BigInt> a_values;
  std::uint64_t lo;
  std::uint64_t hi;
  SweepSettings settings;
};

struct ScanResult {
  std::string kind;  // "wall" or "sweep"
  std::optional<LucasParams> params;
  std::optional<CheckId> check;
  std::vector<BigInt> a_values;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::optional<std::uint64_t> resumed_after;
  std::vector<WallHit> wall_hits;
  /// Sweep output in ascending (p, a) order.
  std::vector<CheckReport> reports;
  ScanCounts counts;
  std::chrono::milliseconds elapsed{0};

  /// Primes of the hits: wall hits, or the p of every failed sweep report.
  std::vector<std::uint64_t> hit_primes() const;
  std::vector<const CheckReport*> failures() const;
};

/// Primes p in [lo, hi] (lo >= 3) with p ∤ A·D and p^2 | u_{p-eps}. Primes
/// dividing A·D are counted as skipped.
ScanResult wall_scan(const WallJob& job, const ScanOptions& options = {});

/// Exact re-evaluation of u_{p-eps} and divisibility by p^2.
bool wall_condition_exact(const LucasParams& params, std::uint64_t p);

/// Runs the check at every prime in [lo, hi] (lo >= 3) and every a; a-free
/// checks run once per prime. Failures are the hits.
ScanResult verify_sweep(const SweepJob& job, const ScanOptions& options = {});

/// One JSON object per line; `include_elapsed` off gives byte-stable output.
std::string summary_json_line(const ScanResult& result, bool include_elapsed);
std::string wall_hit_json_line(const WallHit& hit);

}  // namespace lucasres

#endif  // LUCASRES_SCANNER_HPP
