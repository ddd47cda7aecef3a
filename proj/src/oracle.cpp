#include "tsharp/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "tsharp/error.hpp"
#include "tsharp/toeplitz.hpp"

namespace tsharp {

namespace {

constexpr std::size_t kChunk = 1 << 16;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256** seeded from (seed, stream); one stream per chunk.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL);
    for (auto& w : s_) w = x = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in the closed-ish disk of the given radius.
  cplx disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, kTwoPi * uniform());
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_{};
};

// Evenly spaced points including both ends; a single point sits at hi.
double linspace(std::size_t i, std::size_t n, double lo, double hi) {
  if (n <= 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double phase(std::size_t i, std::size_t n) { return kTwoPi * static_cast<double>(i) / static_cast<double>(n); }

double evaluate(Quantity q, const CoeffPair& c) {
  switch (q) {
    case Quantity::T21: return det_t21(c.a2);
    case Quantity::T31: return det_t31(c.a2, c.a3);
    case Quantity::AbsT22: return abs_det_t22(c.a2, c.a3);
  }
  return 0.0;
}

struct Extremum {
  double value = 0.0;
  ScanPoint at;
};

struct Accumulator {
  static constexpr std::size_t kMax = 3;
  std::size_t n_quantities = 0;
  std::array<Extremum, kMax> lo{}, hi{};
  std::size_t count = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;

  void add(std::size_t k, double v, const ScanPoint& at) {
    if (count == 0 || v < lo[k].value) lo[k] = {v, at};
    if (count == 0 || v > hi[k].value) hi[k] = {v, at};
  }

  // `later` covers strictly higher sample indices, so ties keep this side.
  void merge(const Accumulator& later) {
    if (later.count == 0) return;
    for (std::size_t k = 0; k < n_quantities; ++k) {
      if (count == 0 || later.lo[k].value < lo[k].value) lo[k] = later.lo[k];
      if (count == 0 || later.hi[k].value > hi[k].value) hi[k] = later.hi[k];
    }
    count += later.count;
    violation_count += later.violation_count;
    for (const auto& v : later.violations) {
      if (violations.size() >= OracleReport::kMaxStoredViolations) break;
      violations.push_back(v);
    }
  }
};

struct CheckedBound {
  std::size_t slot;
  Side side;
  double value;
};

struct Layout {
  bool complex_grid = false;  // K(g): p1 gets a phase grid too
  std::size_t grid = 0;
  std::size_t random = 0;
  std::size_t spot = 0;
  std::size_t total() const { return grid + random + spot; }
};

Layout make_layout(const ScanConfig& cfg, bool complex_grid) {
  Layout l;
  l.complex_grid = complex_grid;
  l.grid = cfg.grid_p1 * cfg.grid_zeta_radius * cfg.grid_zeta_phase * (complex_grid ? cfg.grid_p1_phase : 1);
  l.random = cfg.random_samples;
  l.spot = complex_grid ? 0 : cfg.complex_spot_checks;
  return l;
}

ScanPoint grid_point(std::size_t idx, const ScanConfig& cfg, bool complex_grid) {
  const std::size_t iph = idx % cfg.grid_zeta_phase;
  idx /= cfg.grid_zeta_phase;
  const std::size_t ir = idx % cfg.grid_zeta_radius;
  idx /= cfg.grid_zeta_radius;
  double p1_arg = 0.0;
  if (complex_grid) {
    p1_arg = phase(idx % cfg.grid_p1_phase, cfg.grid_p1_phase);
    idx /= cfg.grid_p1_phase;
  }
  const double p1_abs = linspace(idx, cfg.grid_p1, 0.0, 2.0);
  const double r = linspace(ir, cfg.grid_zeta_radius, 0.0, 1.0);
  return {complex_grid ? std::polar(p1_abs, p1_arg) : cplx{p1_abs}, std::polar(r, phase(iph, cfg.grid_zeta_phase))};
}

template <class Coeffs>
OracleReport run_scan(std::string family, std::vector<Quantity> tracked, std::vector<BoundReport> bounds,
                      bool complex_grid, const ScanConfig& cfg, const SampleSink& sink, Coeffs coeffs) {
  cfg.validate();
  const Layout layout = make_layout(cfg, complex_grid);
  if (layout.total() == 0) throw Error(ErrorKind::EmptyScan, "scan configuration yields no samples");

  std::vector<CheckedBound> checks;
  for (const auto& b : bounds) {
    if (!b.applicable()) continue;
    const auto it = std::find(tracked.begin(), tracked.end(), b.quantity);
    if (it != tracked.end())
      checks.push_back({static_cast<std::size_t>(it - tracked.begin()), b.side, b.value});
  }

  const std::size_t n_chunks = (layout.total() + kChunk - 1) / kChunk;
  std::vector<Accumulator> partial(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    Accumulator& acc = partial[c];
    acc.n_quantities = tracked.size();
    Rng rng(cfg.seed, c);
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(begin + kChunk, layout.total());
    std::array<double, Accumulator::kMax> values{};
    for (std::size_t idx = begin; idx < end; ++idx) {
      ScanPoint pt;
      if (idx < layout.grid) {
        pt = grid_point(idx, cfg, complex_grid);
      } else if (idx < layout.grid + layout.random && !complex_grid) {
        pt.p1 = 2.0 * rng.uniform();
        pt.zeta = rng.disk(1.0);
      } else {
        pt.p1 = rng.disk(2.0);
        pt.zeta = rng.disk(1.0);
      }
      const CoeffPair cp = coeffs(pt.p1, caratheodory_p2(pt.p1, pt.zeta));
      for (std::size_t k = 0; k < tracked.size(); ++k) values[k] = evaluate(tracked[k], cp);
      for (const auto& chk : checks) {
        const double v = values[chk.slot];
        const bool bad = chk.side == Side::Lower ? v < chk.value - cfg.tolerance : v > chk.value + cfg.tolerance;
        if (!bad) continue;
        ++acc.violation_count;
        if (acc.violations.size() < OracleReport::kMaxStoredViolations)
          acc.violations.push_back({idx, pt, tracked[chk.slot], chk.side, v, chk.value});
      }
      for (std::size_t k = 0; k < tracked.size(); ++k) acc.add(k, values[k], pt);
      ++acc.count;
      if (sink) sink({pt, cp, det_t31(cp.a2, cp.a3)});
    }
  };

  const unsigned workers = sink ? 1u : std::min<unsigned>(scan_threads(cfg), static_cast<unsigned>(n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t c; (c = next.fetch_add(1)) < n_chunks;) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  Accumulator total;
  total.n_quantities = tracked.size();
  for (const auto& p : partial) total.merge(p);

  OracleReport rep;
  rep.family = std::move(family);
  rep.samples = total.count;
  rep.violation_count = total.violation_count;
  rep.violations = std::move(total.violations);
  for (std::size_t k = 0; k < tracked.size(); ++k)
    rep.stats.push_back({tracked[k], total.lo[k].value, total.hi[k].value, total.lo[k].at, total.hi[k].at});
  for (const auto& b : bounds) {
    if (!b.applicable()) continue;
    const QuantityStats* st = rep.find(b.quantity);
    if (!st) continue;
    const std::string key = std::string(to_string(b.quantity)) + ":" + std::string(to_string(b.side));
    rep.empirical_gaps[key] = b.side == Side::Lower ? st->emp_min - b.value : b.value - st->emp_max;
  }
  rep.bounds = std::move(bounds);
  return rep;
}

OracleReport not_applicable(std::string family, std::vector<BoundReport> bounds) {
  OracleReport rep;
  rep.family = std::move(family);
  rep.applicable = false;
  rep.bounds = std::move(bounds);
  return rep;
}

std::string ma_minda_label(const char* kind, double b1, double b2) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s:B1=%.17g,B2=%.17g", kind, b1, b2);
  return buf;
}

// Minimum of c0 + c1 x + c2 x^2 over [0, 4]: endpoints plus the vertex when convex.
std::pair<double, double> clamp_minimize(double c0, double c1, double c2) {
  const auto g = [&](double x) { return c0 + c1 * x + c2 * x * x; };
  std::pair<double, double> best{0.0, g(0.0)};
  const auto consider = [&](double x) {
    const double v = g(x);
    if (v < best.second || (v == best.second && x > best.first)) best = {x, v};
  };
  consider(4.0);
  if (c2 > 0.0) consider(std::clamp(-c1 / (2.0 * c2), 0.0, 4.0));
  return best;
}

}  // namespace

void ScanConfig::validate() const {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::BadParams, "tolerance must be positive");
}

unsigned scan_threads(const ScanConfig& cfg) {
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOEPLITZ_SHARP_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

const QuantityStats* OracleReport::find(Quantity q) const {
  for (const auto& s : stats)
    if (s.quantity == q) return &s;
  return nullptr;
}

OracleReport scan_starlike(double b1, double b2, const ScanConfig& cfg, const SampleSink& sink) {
  std::vector<BoundReport> bounds;
  for (auto& r : t21_starlike(b1)) bounds.push_back(std::move(r));
  bounds.push_back(t31_lower_starlike(b1, b2));
  bounds.push_back(t31_upper_starlike(b1, b2));
  auto label = ma_minda_label("starlike", b1, b2);
  if (!bounds[2].applicable()) return not_applicable(std::move(label), std::move(bounds));
  return run_scan(std::move(label), {Quantity::T21, Quantity::T31}, std::move(bounds), false, cfg, sink,
                  [b1, b2](cplx p1, cplx p2) { return a2a3_starlike(b1, b2, p1, p2); });
}

OracleReport scan_convex(double b1, double b2, const ScanConfig& cfg, const SampleSink& sink) {
  std::vector<BoundReport> bounds;
  for (auto& r : t21_convex(b1)) bounds.push_back(std::move(r));
  bounds.push_back(t31_lower_convex(b1, b2));
  bounds.push_back(t31_upper_convex(b1, b2));
  auto label = ma_minda_label("convex", b1, b2);
  if (!bounds[2].applicable()) return not_applicable(std::move(label), std::move(bounds));
  return run_scan(std::move(label), {Quantity::T21, Quantity::T31}, std::move(bounds), false, cfg, sink,
                  [b1, b2](cplx p1, cplx p2) { return a2a3_convex(b1, b2, p1, p2); });
}

OracleReport scan_ctc(cplx b2, cplx b3, const ScanConfig& cfg, const SampleSink& sink) {
  auto bounds = t_bounds_ctc(std::abs(b2), std::abs(b3));
  char buf[160];
  std::snprintf(buf, sizeof buf, "ctc:b2=%.17g%+.17gi,b3=%.17g%+.17gi", b2.real(), b2.imag(), b3.real(), b3.imag());
  return run_scan(buf, {Quantity::T21, Quantity::T31, Quantity::AbsT22}, std::move(bounds), true, cfg, sink,
                  [b2, b3](cplx p1, cplx p2) { return a2a3_ctc(b2, b3, p1, p2); });
}

std::map<std::string, double> check_sharpness(const FamilySpec& family, std::span<const BoundReport> bounds) {
  std::map<std::string, double> gaps;
  for (const auto& b : bounds) {
    if (!b.applicable() || !b.extremal) continue;
    const Series f = extremal(*b.extremal, family);
    const double det = evaluate(b.quantity, {f[2], f[3]});
    const std::string key = std::string(to_string(*b.extremal)) + ":" + std::string(to_string(b.quantity)) + ":" +
                            std::string(to_string(b.side));
    gaps[key] = std::abs(det - b.value);
  }
  return gaps;
}

OracleReport verify_family(const FamilySpec& family, const ScanConfig& cfg, const SampleSink& sink) {
  OracleReport rep;
  switch (family.kind) {
    case FamilyKind::Starlike:
      rep = scan_starlike(family.generator->b1(), family.generator->b2(), cfg, sink);
      break;
    case FamilyKind::Convex:
      rep = scan_convex(family.generator->b1(), family.generator->b2(), cfg, sink);
      break;
    case FamilyKind::CloseToConvex:
      rep = scan_ctc(family.b2(), family.b3(), cfg, sink);
      break;
  }
  rep.family = family.label();
  rep.sharp_gaps = check_sharpness(family, rep.bounds);
  return rep;
}

std::pair<double, double> minimize_G_direct(double b1, double b2) {
  // det T31 >= F(x, y) = A x^2 - (B1^2/2) x - C x (4-x) y + 1 - (B1^2/64) (4-x)^2 y^2
  // with x = p1^2, y = |zeta|; G(x) = F(x, 1).
  const double s = b1 * b1;
  const double a = (3.0 * s * s + 2.0 * s * b2 - b2 * b2) / 64.0;
  const double c = b1 * (s - b2) / 32.0;
  const double q = s / 64.0;
  return clamp_minimize(1.0 - 16.0 * q, -s / 2.0 - 4.0 * c + 8.0 * q, a + c - q);
}

std::pair<double, double> minimize_G_convex_direct(double b1, double b2) {
  // F(x, y) = 1 - B1^2 x / 8 + (A x^2 - C x (4-x) y - B1^2 (4-x)^2 y^2) / 576
  const double s = b1 * b1;
  const double a = (2.0 * s * s + s * b2 - b2 * b2) / 576.0;
  const double c = (s * b1 - 2.0 * b1 * b2) / 576.0;
  const double q = s / 576.0;
  return clamp_minimize(1.0 - 16.0 * q, -s / 8.0 - 4.0 * c + 8.0 * q, a + c - q);
}

}  // namespace tsharp
