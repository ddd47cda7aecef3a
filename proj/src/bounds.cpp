#include "tsharp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tsharp/error.hpp"

namespace tsharp {

namespace {

// Below this the G(x) quadratic coefficient is treated as zero.
constexpr double kDegenerate = 1e-14;
// Slack for the non-strict parameter preconditions and the mu = 4 branch.
constexpr double kBoundaryTolerance = 1e-12;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_b1(double b1) {
  if (!(b1 > 0.0 && b1 <= 2.0)) throw Error(ErrorKind::BadB1, "B1 must lie in (0, 2]");
}

BoundReport make(Quantity q, Side s, double value, std::string label, bool sharp,
                 std::optional<ExtremalId> ext, std::vector<Precondition> pre = {}) {
  BoundReport r;
  r.quantity = q;
  r.side = s;
  r.value = value;
  r.case_label = std::move(label);
  r.sharp = sharp;
  r.extremal = ext;
  r.preconditions = std::move(pre);
  return r;
}

BoundReport inapplicable(Quantity q, Side s, std::vector<Precondition> pre) {
  return make(q, s, kNaN, "inapplicable", false, std::nullopt, std::move(pre));
}

bool is_four(double x) { return std::abs(x - 4.0) <= 4.0 * kBoundaryTolerance; }

double starlike_g4(double b1, double b2) {
  const double s = b1 * b1;
  return 1.0 - 2.0 * s + 0.75 * s * s + 0.5 * s * b2 - 0.25 * b2 * b2;
}

double convex_g4(double b1, double b2) {
  const double s = b1 * b1;
  return 1.0 - s / 2.0 + s * s / 18.0 + s * b2 / 36.0 - b2 * b2 / 36.0;
}

double starlike_den(double b1, double b2) {
  return (3.0 * b1 * b1 - b2) * (b1 * b1 + b2) + b1 * (2.0 * b1 * b1 - 2.0 * b2 - b1);
}

double convex_den(double b1, double b2) {
  const double s = b1 * b1;
  return 2.0 * s * s + s * b1 - s - 2.0 * b1 * b2 + s * b2 - b2 * b2;
}

// Shared branch logic of the two lower bounds. g0 and g4 are paired with the
// extremals that realize x = 0 (p1 = 0) and x = 4 (p1 = 2).
BoundReport dispatch_lower(const std::string& prefix, std::optional<double> crit, double g0, double g4,
                           double interior, ExtremalId at0, ExtremalId at4, std::vector<Precondition> pre) {
  BoundReport r;
  if (!crit) {
    // G is linear with negative slope on [0, 4].
    r = make(Quantity::T31, Side::Lower, g4, prefix + "-degenerate", true, at4, std::move(pre));
  } else if (is_four(*crit)) {
    r = make(Quantity::T31, Side::Lower, g4, prefix + "-eq-4", true, at4, std::move(pre));
  } else if (*crit < 0.0 || *crit > 4.0) {
    const bool zero_wins = g0 <= g4;
    r = make(Quantity::T31, Side::Lower, zero_wins ? g0 : g4, prefix + "-outside", true, zero_wins ? at0 : at4,
             std::move(pre));
  } else {
    r = make(Quantity::T31, Side::Lower, interior, prefix + "-interior", false, std::nullopt, std::move(pre));
    r.notes = "interior critical point; not asserted sharp";
  }
  r.mu_or_sigma = crit;
  return r;
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::T21: return "T21";
    case Quantity::T31: return "T31";
    case Quantity::AbsT22: return "ABS_T22";
  }
  return "?";
}

std::string_view to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

Quantity parse_quantity(std::string_view text) {
  if (text == "T21") return Quantity::T21;
  if (text == "T31") return Quantity::T31;
  if (text == "ABS_T22" || text == "T22") return Quantity::AbsT22;
  throw Error(ErrorKind::Parse, "unknown quantity '" + std::string(text) + "'");
}

Side parse_side(std::string_view text) {
  if (text == "lower") return Side::Lower;
  if (text == "upper") return Side::Upper;
  throw Error(ErrorKind::Parse, "unknown side '" + std::string(text) + "'");
}

bool BoundReport::applicable() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const Precondition& p) { return p.ok; });
}

bool BoundReport::operator==(const BoundReport& o) const {
  const bool same_value = value == o.value || (std::isnan(value) && std::isnan(o.value));
  return same_value && quantity == o.quantity && side == o.side && case_label == o.case_label &&
         mu_or_sigma == o.mu_or_sigma && preconditions == o.preconditions && sharp == o.sharp &&
         extremal == o.extremal && notes == o.notes;
}

Quadratic lower_quadratic_starlike(double b1, double b2) {
  return {1.0 - b1 * b1 / 4.0, -b1 * (b1 * b1 + 3.0 * b1 - b2) / 8.0, starlike_den(b1, b2) / 64.0};
}

Quadratic lower_quadratic_convex(double b1, double b2) {
  return {1.0 - b1 * b1 / 36.0, -b1 * (b1 * b1 + 16.0 * b1 - 2.0 * b2) / 144.0, convex_den(b1, b2) / 576.0};
}

std::optional<double> mu_starlike(double b1, double b2) {
  const double den = starlike_den(b1, b2);
  if (std::abs(den) < kDegenerate) return std::nullopt;
  return 4.0 * b1 * (b1 * b1 + 3.0 * b1 - b2) / den;
}

std::optional<double> sigma_convex(double b1, double b2) {
  const double den = convex_den(b1, b2);
  if (std::abs(den) < kDegenerate) return std::nullopt;
  return 2.0 * b1 * (b1 * b1 + 16.0 * b1 - 2.0 * b2) / den;
}

double starlike_lower_interior(double b1, double b2) {
  const double num = b1 * b1 + 3.0 * b1 - b2;
  return 1.0 - b1 * b1 / 4.0 - b1 * b1 * num * num / (4.0 * starlike_den(b1, b2));
}

double convex_lower_interior(double b1, double b2) {
  const double num = b1 * b1 * b1 + 4.0 * b1 * b1 + 28.0 * b1 - 8.0 * b2;
  return 1.0 - b1 * b1 * b1 * num / (16.0 * convex_den(b1, b2));
}

std::array<BoundReport, 2> t21_starlike(double b1) {
  check_b1(b1);
  return {make(Quantity::T21, Side::Lower, 1.0 - b1 * b1, "t21-starlike", true, ExtremalId::F1),
          make(Quantity::T21, Side::Upper, 1.0, "t21-starlike", true, ExtremalId::F2)};
}

BoundReport t31_upper_starlike(double b1, double b2) {
  check_b1(b1);
  const double s = b1 * b1;
  std::vector<Precondition> pre{{"B1 <= |B2 + B1^2|", b1 <= std::abs(b2 + s) + kBoundaryTolerance}};
  if (!pre[0].ok) return inapplicable(Quantity::T31, Side::Upper, std::move(pre));
  const double disc = 3.0 * s * s - 8.0 * s + 2.0 * s * b2 - b2 * b2;
  if (disc < 0.0) return make(Quantity::T31, Side::Upper, 1.0, "t31-upper-starlike-unit", true, ExtremalId::Identity,
                              std::move(pre));
  const double t = s + b2;
  return make(Quantity::T31, Side::Upper, s * t - 0.25 * t * t - 2.0 * s + 1.0, "t31-upper-starlike-extremal", true,
              ExtremalId::F1, std::move(pre));
}

BoundReport t31_lower_starlike(double b1, double b2) {
  check_b1(b1);
  std::vector<Precondition> pre{{"B1^2 >= B2", b1 * b1 - b2 >= -kBoundaryTolerance}};
  if (!pre[0].ok) return inapplicable(Quantity::T31, Side::Lower, std::move(pre));
  const auto mu = mu_starlike(b1, b2);
  return dispatch_lower("t31-lower-starlike-mu", mu, 1.0 - b1 * b1 / 4.0, starlike_g4(b1, b2),
                        mu ? starlike_lower_interior(b1, b2) : kNaN, ExtremalId::F2, ExtremalId::F1, std::move(pre));
}

std::array<BoundReport, 2> t21_convex(double b1) {
  check_b1(b1);
  return {make(Quantity::T21, Side::Lower, 1.0 - b1 * b1 / 4.0, "t21-convex", true, ExtremalId::F3),
          make(Quantity::T21, Side::Upper, 1.0, "t21-convex", true, ExtremalId::F4)};
}

BoundReport t31_upper_convex(double b1, double b2) {
  check_b1(b1);
  std::vector<Precondition> pre{{"B1 <= |B2 + B1^2|", b1 <= std::abs(b2 + b1 * b1) + kBoundaryTolerance}};
  if (!pre[0].ok) return inapplicable(Quantity::T31, Side::Upper, std::move(pre));
  return make(Quantity::T31, Side::Upper, 1.0, "t31-upper-convex", true, ExtremalId::Identity, std::move(pre));
}

BoundReport t31_lower_convex(double b1, double b2) {
  check_b1(b1);
  std::vector<Precondition> pre{{"B1^2 >= 2 B2", b1 * b1 - 2.0 * b2 >= -kBoundaryTolerance}};
  if (!pre[0].ok) return inapplicable(Quantity::T31, Side::Lower, std::move(pre));
  const auto sigma = sigma_convex(b1, b2);
  return dispatch_lower("t31-lower-convex-sigma", sigma, 1.0 - b1 * b1 / 36.0, convex_g4(b1, b2),
                        sigma ? convex_lower_interior(b1, b2) : kNaN, ExtremalId::F4, ExtremalId::F3,
                        std::move(pre));
}

double ctc_hypothesis(double b2, double b3) {
  return 6.0 * b2 * b2 * b2 - 4.0 * b2 * (b3 - 1.0) - 4.0 * (b3 - 1.0) * (b3 - 1.0) + b2 * b2 * (3.0 * b3 + 5.0);
}

double ctc_switch(double b2, double b3) {
  return 6.0 * b2 * b2 * b2 + b2 * b2 * (3.0 * b3 + 13.0) + 4.0 * b2 * (b3 - 1.0) - 2.0 * (1.0 - b3) * (1.0 - b3) -
         18.0;
}

std::vector<BoundReport> t_bounds_ctc(double b2, double b3) {
  if (!(b2 >= 0.0 && b3 >= 0.0)) throw Error(ErrorKind::BadParams, "|b2| and |b3| must be non-negative");
  std::vector<BoundReport> out;
  const double a2_max = 1.0 + b2 / 2.0;
  const double a3_max = (b3 + 2.0 * b2 + 2.0) / 3.0;

  out.push_back(make(Quantity::T21, Side::Lower, 1.0 - a2_max * a2_max, "t21-ctc", true, ExtremalId::F5));
  auto upper21 = make(Quantity::T21, Side::Upper, 1.0, "t21-ctc", true, std::nullopt);
  upper21.notes = "attained where p1 = -b2; f6 has a2 = 1 and does not attain it";
  out.push_back(std::move(upper21));

  std::vector<Precondition> pre{{"hypothesis >= 0", ctc_hypothesis(b2, b3) >= 0.0}};
  if (!pre[0].ok) {
    out.push_back(inapplicable(Quantity::T31, Side::Upper, std::move(pre)));
  } else {
    const double sw = ctc_switch(b2, b3);
    BoundReport r = sw <= 0.0
                        ? make(Quantity::T31, Side::Upper, 1.0, "t31-upper-ctc-unit", true, ExtremalId::Identity,
                               std::move(pre))
                        : make(Quantity::T31, Side::Upper, (sw + 18.0) / 18.0, "t31-upper-ctc-extremal", true,
                               ExtremalId::F5, std::move(pre));
    r.notes = "upper bound: maximum of u(x) at x = max|a3|";
    out.push_back(std::move(r));
  }

  BoundReport t22 = make(Quantity::AbsT22, Side::Upper, a2_max * a2_max + a3_max * a3_max, "t22-ctc", true,
                         ExtremalId::F7);
  t22.notes = "f7 is built on the rotated base; K(g) itself may stay below the bound";
  out.push_back(std::move(t22));
  return out;
}

std::vector<BoundReport> bounds_for(const FamilySpec& family) {
  std::vector<BoundReport> out;
  switch (family.kind) {
    case FamilyKind::Starlike: {
      const double b1 = family.generator->b1(), b2 = family.generator->b2();
      for (auto& r : t21_starlike(b1)) out.push_back(std::move(r));
      out.push_back(t31_lower_starlike(b1, b2));
      out.push_back(t31_upper_starlike(b1, b2));
      break;
    }
    case FamilyKind::Convex: {
      const double b1 = family.generator->b1(), b2 = family.generator->b2();
      for (auto& r : t21_convex(b1)) out.push_back(std::move(r));
      out.push_back(t31_lower_convex(b1, b2));
      out.push_back(t31_upper_convex(b1, b2));
      break;
    }
    case FamilyKind::CloseToConvex:
      out = t_bounds_ctc(std::abs(family.b2()), std::abs(family.b3()));
      break;
  }
  return out;
}

}  // namespace tsharp
