#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsharp/classes.hpp"

namespace tsharp {

enum class Quantity { T21, T31, AbsT22 };
enum class Side { Lower, Upper };

std::string_view to_string(Quantity q);
std::string_view to_string(Side s);
Quantity parse_quantity(std::string_view text);
Side parse_side(std::string_view text);

struct Precondition {
  std::string name;
  bool ok = true;

  bool operator==(const Precondition&) const = default;
};

// One side of one determinant bound. A report whose preconditions do not all
// hold is "inapplicable": its value is NaN and case_label is "inapplicable".
struct BoundReport {
  Quantity quantity = Quantity::T31;
  Side side = Side::Upper;
  double value = 0.0;
  std::string case_label;
  std::optional<double> mu_or_sigma;
  std::vector<Precondition> preconditions;
  bool sharp = false;
  std::optional<ExtremalId> extremal;
  std::string notes;

  bool applicable() const;
  // NaN values compare equal to each other.
  bool operator==(const BoundReport& o) const;
};

// Coefficients of the lower-bound quadratic G(x) = c0 + c1 x + c2 x^2 on x in [0, 4].
struct Quadratic {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double operator()(double x) const { return c0 + x * (c1 + x * c2); }
};

Quadratic lower_quadratic_starlike(double b1, double b2);
Quadratic lower_quadratic_convex(double b1, double b2);

// Critical point of G (mu for S*(phi), sigma for C(phi)); nullopt when the
// quadratic coefficient is degenerate.
std::optional<double> mu_starlike(double b1, double b2);
std::optional<double> sigma_convex(double b1, double b2);

// G at its critical point, using the closed form of the interior branch.
double starlike_lower_interior(double b1, double b2);
double convex_lower_interior(double b1, double b2);

// All of these throw BadB1 unless B1 in (0, 2].
std::array<BoundReport, 2> t21_starlike(double b1);
BoundReport t31_upper_starlike(double b1, double b2);
BoundReport t31_lower_starlike(double b1, double b2);
std::array<BoundReport, 2> t21_convex(double b1);
BoundReport t31_upper_convex(double b1, double b2);
BoundReport t31_lower_convex(double b1, double b2);

// Bounds for K(g) from |b2| and |b3|: T21 lower/upper, T31 upper, |T22| upper.
std::vector<BoundReport> t_bounds_ctc(double b2_abs, double b3_abs);

// Left-hand side of the K(g) hypothesis; the T31 bound needs it >= 0.
double ctc_hypothesis(double b2_abs, double b3_abs);
// Switch between the unit bound (<= 0) and the extremal bound (> 0).
double ctc_switch(double b2_abs, double b3_abs);

// Every bound the family admits, in a fixed order.
std::vector<BoundReport> bounds_for(const FamilySpec& family);

}  // namespace tsharp
