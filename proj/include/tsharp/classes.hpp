#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsharp/series.hpp"

namespace tsharp {

// Ma-Minda generator phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...
// Invariants (checked by make_generator): phi(0) = 1, real coefficients,
// B1 in (0, 2], B2 in [-2, 2].
struct MindaGenerator {
  Series series;
  std::string name;
  std::vector<double> params;

  double b1() const { return series[1].real(); }
  double b2() const { return series[2].real(); }
  // Stored for completeness; no bound formula uses it.
  double b3() const { return series[3].real(); }
};

MindaGenerator make_generator(Series phi, std::string name, std::vector<double> params = {});

struct RegistryEntry {
  std::string name;
  std::vector<std::string> param_names;
  std::string description;
};

const std::vector<RegistryEntry>& generator_registry();

// Built-in generators: janowski(A, B), order(alpha), strongly(alpha), sin,
// parabolic, sigmoid, nephroid, lemniscate. "custom" generators come from
// make_generator with a user-supplied series.
MindaGenerator phi_named(std::string_view name, std::span<const double> params = {},
                         std::size_t order = kDefaultOrder);

enum class FamilyKind { Starlike, Convex, CloseToConvex };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family(std::string_view text);

// S*(phi), C(phi) or K(g). For K(g) the base g = z + b2 z^2 + b3 z^3 + ...
struct FamilySpec {
  FamilyKind kind;
  std::optional<MindaGenerator> generator;
  std::optional<Series> base;
  std::string base_name;

  static FamilySpec starlike(MindaGenerator phi);
  static FamilySpec convex(MindaGenerator phi);
  static FamilySpec close_to_convex(Series g, std::string name = "custom");

  cplx b2() const { return (*base)[2]; }
  cplx b3() const { return (*base)[3]; }
  std::string label() const;
};

struct BaseEntry {
  std::string name;
  std::string description;
};

const std::vector<BaseEntry>& base_registry();

// Named bases: f1-base = z/(1-z), f2-base = z/(1-z^2), f3-base (alias koebe)
// = z/(1-z)^2, f4-base = z/(1-z+z^2), id = z.
Series base_named(std::string_view name, std::size_t order = kDefaultOrder);
// Validates g(0) = 0, g'(0) = 1.
Series validate_base(Series g);

// Point of the (p1, p2) Caratheodory coefficient body after rotation:
// p1 in [0, 2], |zeta| <= 1, 2 p2 = p1^2 + (4 - p1^2) zeta.
struct SamplePoint {
  double p1 = 0.0;
  cplx zeta{};

  cplx p2() const;
  bool valid() const;
};

// General complex form 2 p2 = p1^2 + (4 - |p1|^2) zeta, |p1| <= 2.
cplx caratheodory_p2(cplx p1, cplx zeta);

struct CoeffPair {
  cplx a2;
  cplx a3;
};

CoeffPair a2a3_starlike(double b1, double b2, cplx p1, cplx p2);
CoeffPair a2a3_starlike(double b1, double b2, const SamplePoint& s);
CoeffPair a2a3_convex(double b1, double b2, cplx p1, cplx p2);
CoeffPair a2a3_convex(double b1, double b2, const SamplePoint& s);
CoeffPair a2a3_ctc(cplx b2, cplx b3, cplx p1, cplx p2);

// Taylor coefficients of f from z f'/f = phi(omega), resp. 1 + z f''/f' = phi(omega).
// omega must vanish at 0; Schwarz-ness of omega is not checked.
Series coeffs_starlike(const MindaGenerator& phi, const Series& omega);
Series coeffs_convex(const MindaGenerator& phi, const Series& omega);

// The Schwarz function (p - 1)/(p + 1) for p = 1 + p1 z + p2 z^2.
Series schwarz_from_caratheodory(cplx p1, cplx p2, std::size_t order = kDefaultOrder);

enum class ExtremalId { Identity, F1, F2, F3, F4, F5, F6, F7 };

std::string_view to_string(ExtremalId id);
ExtremalId parse_extremal(std::string_view text);
// Family an extremal belongs to; Identity belongs to all of them.
std::optional<FamilyKind> extremal_family(ExtremalId id);

// Taylor coefficients (index k holds a_k) of the named extremal function.
// Throws IncompatibleExtremal when id does not belong to ctx.kind.
Series extremal(ExtremalId id, const FamilySpec& ctx);

}  // namespace tsharp
