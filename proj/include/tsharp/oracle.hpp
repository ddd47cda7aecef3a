#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsharp/bounds.hpp"
#include "tsharp/classes.hpp"

namespace tsharp {

// Sampling plan over the (p1, zeta) coefficient body.
//
// The grid is p1 in [0, 2] (inclusive, grid_p1 points) x |zeta| in [0, 1]
// (inclusive) x arg zeta in [0, 2 pi) (exclusive). For K(g) the base breaks
// rotation invariance, so p1 additionally gets grid_p1_phase phases and the
// random samples draw p1 from the full disk |p1| <= 2. For S*(phi) and C(phi)
// complex_spot_checks random points with complex p1 test the rotation
// reduction.
struct ScanConfig {
  std::size_t grid_p1 = 200;
  std::size_t grid_zeta_radius = 64;
  std::size_t grid_zeta_phase = 64;
  std::size_t grid_p1_phase = 32;
  std::size_t random_samples = 1'000'000;
  std::size_t complex_spot_checks = 10'000;
  std::uint64_t seed = 0x70e9117a;
  double tolerance = 1e-9;
  // 0: default (hardware concurrency, capped by TOEPLITZ_SHARP_THREADS).
  unsigned threads = 0;

  // Throws BadParams for a non-positive tolerance. Zero counts are allowed;
  // a plan with no samples at all fails in the scan with EmptyScan.
  void validate() const;
};

struct ScanPoint {
  cplx p1{};
  cplx zeta{};
};

struct QuantityStats {
  Quantity quantity = Quantity::T31;
  double emp_min = 0.0;
  double emp_max = 0.0;
  ScanPoint argmin;
  ScanPoint argmax;
};

struct Violation {
  std::size_t index = 0;
  ScanPoint point;
  Quantity quantity = Quantity::T31;
  Side side = Side::Lower;
  double value = 0.0;
  double bound = 0.0;
};

struct OracleReport {
  std::string family;
  // False when the scan's governing precondition fails (nothing is scanned).
  bool applicable = true;
  std::size_t samples = 0;
  std::vector<QuantityStats> stats;
  std::size_t violation_count = 0;
  // First kMaxStoredViolations violations in sample order.
  std::vector<Violation> violations;
  std::vector<BoundReport> bounds;
  // "<extremal>:<quantity>:<side>" -> |det(extremal) - bound|
  std::map<std::string, double> sharp_gaps;
  // "<quantity>:<side>" -> emp_min - lower, or upper - emp_max
  std::map<std::string, double> empirical_gaps;

  static constexpr std::size_t kMaxStoredViolations = 100;

  bool pass() const { return applicable && violation_count == 0; }
  const QuantityStats* find(Quantity q) const;
};

// Row callback for sample dumps. Supplying one forces sequential evaluation.
struct SampleRow {
  ScanPoint point;
  CoeffPair coeffs;
  double det31 = 0.0;
};
using SampleSink = std::function<void(const SampleRow&)>;

OracleReport scan_starlike(double b1, double b2, const ScanConfig& cfg, const SampleSink& sink = {});
OracleReport scan_convex(double b1, double b2, const ScanConfig& cfg, const SampleSink& sink = {});
OracleReport scan_ctc(cplx b2, cplx b3, const ScanConfig& cfg, const SampleSink& sink = {});

// Determinant of each bound's quantity at its named extremal, against the bound.
// Reports without an extremal or without applicability are skipped.
std::map<std::string, double> check_sharpness(const FamilySpec& family, std::span<const BoundReport> bounds);

// Scan plus sharpness check for a full family.
OracleReport verify_family(const FamilySpec& family, const ScanConfig& cfg, const SampleSink& sink = {});

// Minimum of G(x) = F(x, 1) over [0, 4], with the quadratic expanded from
// the (x, y) reduction of det T31 rather than taken from the bounds module.
// Returns (argmin, min).
std::pair<double, double> minimize_G_direct(double b1, double b2);
std::pair<double, double> minimize_G_convex_direct(double b1, double b2);

// Worker count used by the scans for cfg.
unsigned scan_threads(const ScanConfig& cfg);

}  // namespace tsharp
