#include "tsharp/classes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tsharp/error.hpp"

namespace tsharp {

namespace {

constexpr double kRealTolerance = 1e-12;

using std::numbers::pi;

void expect_params(std::string_view name, std::span<const double> params, std::size_t n) {
  if (params.size() != n) {
    std::ostringstream os;
    os << name << " takes " << n << " parameter(s), got " << params.size();
    throw Error(ErrorKind::BadParams, os.str());
  }
}

Series mobius(double a, double b, std::size_t order) {
  // (1 + a z) / (1 + b z)
  return div(Series(order, {1.0, a}), Series(order, {1.0, b}));
}

Series one_plus_sin(std::size_t order) {
  Series s = Series::constant(1.0, order);
  double fact = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= static_cast<double>(k);
    if (k % 2 == 1) s[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
  }
  return s;
}

Series parabolic(std::size_t order) {
  // log((1+w)/(1-w)) = 2 w s(w^2) with s(z) = sum z^k / (2k+1), so the
  // generator is 1 + (8/pi^2) z s(z)^2.
  Series s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = 1.0 / static_cast<double>(2 * k + 1);
  Series phi = shift_up(mul(s, s)).truncated(order) * cplx{8.0 / (pi * pi)};
  phi[0] = 1.0;
  return phi;
}

Series sigmoid(std::size_t order) {
  // 2 / (1 + e^{-z})
  const Series e = exp_series(Series(order, {0.0, -1.0}));
  return div(Series::constant(2.0, order), Series::constant(1.0, order) + e);
}

std::string format_params(const std::vector<double>& params) {
  if (params.empty()) return {};
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

}  // namespace

MindaGenerator make_generator(Series phi, std::string name, std::vector<double> params) {
  if (phi.order() < 3) throw Error(ErrorKind::BadParams, "generator needs coefficients through z^3");
  if (std::abs(phi[0] - 1.0) > kRealTolerance) throw Error(ErrorKind::BadParams, "generator must satisfy phi(0) = 1");
  for (std::size_t k = 0; k <= phi.order(); ++k) {
    if (std::abs(phi[k].imag()) > kRealTolerance)
      throw Error(ErrorKind::BadParams, "generator coefficients must be real");
    phi[k] = phi[k].real();
  }
  phi[0] = 1.0;
  const double b1 = phi[1].real();
  const double b2 = phi[2].real();
  if (!(b1 > 0.0 && b1 <= 2.0)) throw Error(ErrorKind::BadParams, "generator needs B1 in (0, 2]");
  if (!(b2 >= -2.0 && b2 <= 2.0)) throw Error(ErrorKind::BadParams, "generator needs B2 in [-2, 2]");
  return MindaGenerator{std::move(phi), std::move(name), std::move(params)};
}

const std::vector<RegistryEntry>& generator_registry() {
  static const std::vector<RegistryEntry> entries = {
      {"janowski", {"A", "B"}, "(1+Az)/(1+Bz), -1 <= B < A <= 1"},
      {"order", {"a"}, "(1+(1-2a)z)/(1-z), 0 <= a < 1"},
      {"strongly", {"a"}, "((1+z)/(1-z))^a, 0 < a <= 1"},
      {"sin", {}, "1+sin z"},
      {"parabolic", {}, "1+(2/pi^2) log^2((1+sqrt z)/(1-sqrt z))"},
      {"sigmoid", {}, "2/(1+e^-z)"},
      {"nephroid", {}, "1+z-z^3/3"},
      {"lemniscate", {}, "sqrt(1+z)"},
  };
  return entries;
}

MindaGenerator phi_named(std::string_view name, std::span<const double> params, std::size_t order) {
  if (order < 3) throw Error(ErrorKind::BadParams, "truncation order must be at least 3");
  std::vector<double> p(params.begin(), params.end());
  const std::string label(name);
  if (name == "janowski") {
    expect_params(name, params, 2);
    const double a = p[0], b = p[1];
    if (!(b >= -1.0 && b < a && a <= 1.0)) throw Error(ErrorKind::BadParams, "janowski needs -1 <= B < A <= 1");
    return make_generator(mobius(a, b, order), label, p);
  }
  if (name == "order") {
    expect_params(name, params, 1);
    const double alpha = p[0];
    if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::BadParams, "order needs 0 <= a < 1");
    return make_generator(mobius(1.0 - 2.0 * alpha, -1.0, order), label, p);
  }
  if (name == "strongly") {
    expect_params(name, params, 1);
    const double alpha = p[0];
    if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::BadParams, "strongly needs 0 < a <= 1");
    return make_generator(pow_series(mobius(1.0, -1.0, order), alpha), label, p);
  }
  if (name == "sin") {
    expect_params(name, params, 0);
    return make_generator(one_plus_sin(order), label);
  }
  if (name == "parabolic") {
    expect_params(name, params, 0);
    return make_generator(parabolic(order), label);
  }
  if (name == "sigmoid") {
    expect_params(name, params, 0);
    return make_generator(sigmoid(order), label);
  }
  if (name == "nephroid") {
    expect_params(name, params, 0);
    return make_generator(Series(order, {1.0, 1.0, 0.0, -1.0 / 3.0}), label);
  }
  if (name == "lemniscate") {
    expect_params(name, params, 0);
    return make_generator(sqrt_series(Series(order, {1.0, 1.0})), label);
  }
  throw Error(ErrorKind::UnknownClass, "no generator named '" + label + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Starlike: return "starlike";
    case FamilyKind::Convex: return "convex";
    case FamilyKind::CloseToConvex: return "ctc";
  }
  return "?";
}

FamilyKind parse_family(std::string_view text) {
  if (text == "starlike") return FamilyKind::Starlike;
  if (text == "convex") return FamilyKind::Convex;
  if (text == "ctc" || text == "close-to-convex") return FamilyKind::CloseToConvex;
  throw Error(ErrorKind::UnknownClass, "unknown family '" + std::string(text) + "'");
}

FamilySpec FamilySpec::starlike(MindaGenerator phi) {
  return FamilySpec{FamilyKind::Starlike, std::move(phi), std::nullopt, {}};
}

FamilySpec FamilySpec::convex(MindaGenerator phi) {
  return FamilySpec{FamilyKind::Convex, std::move(phi), std::nullopt, {}};
}

FamilySpec FamilySpec::close_to_convex(Series g, std::string name) {
  return FamilySpec{FamilyKind::CloseToConvex, std::nullopt, validate_base(std::move(g)), std::move(name)};
}

std::string FamilySpec::label() const {
  std::string s(to_string(kind));
  s += ':';
  if (generator) s += generator->name + format_params(generator->params);
  else s += base_name;
  return s;
}

const std::vector<BaseEntry>& base_registry() {
  static const std::vector<BaseEntry> entries = {
      {"f1-base", "z/(1-z)"},
      {"f2-base", "z/(1-z^2)"},
      {"f3-base", "z/(1-z)^2 (alias: koebe)"},
      {"f4-base", "z/(1-z+z^2)"},
      {"id", "z"},
  };
  return entries;
}

Series base_named(std::string_view name, std::size_t order) {
  if (order < 3) throw Error(ErrorKind::BadParams, "truncation order must be at least 3");
  const Series z = Series::variable(order);
  const Series one = Series::constant(1.0, order);
  Series den;
  if (name == "f1-base") den = Series(order, {1.0, -1.0});
  else if (name == "f2-base") den = Series(order, {1.0, 0.0, -1.0});
  else if (name == "f3-base" || name == "koebe") den = Series(order, {1.0, -2.0, 1.0});
  else if (name == "f4-base") den = Series(order, {1.0, -1.0, 1.0});
  else if (name == "id") den = one;
  else throw Error(ErrorKind::UnknownClass, "no base function named '" + std::string(name) + "'");
  return div(z, den);
}

Series validate_base(Series g) {
  if (g.order() < 3) throw Error(ErrorKind::BadParams, "base function needs coefficients through z^3");
  if (std::abs(g[0]) > kRealTolerance || std::abs(g[1] - 1.0) > kRealTolerance)
    throw Error(ErrorKind::BadParams, "base function must satisfy g(0) = 0, g'(0) = 1");
  g[0] = 0.0;
  g[1] = 1.0;
  return g;
}

cplx SamplePoint::p2() const { return caratheodory_p2(p1, zeta); }

bool SamplePoint::valid() const { return p1 >= 0.0 && p1 <= 2.0 && std::abs(zeta) <= 1.0; }

cplx caratheodory_p2(cplx p1, cplx zeta) { return 0.5 * (p1 * p1 + (4.0 - std::norm(p1)) * zeta); }

CoeffPair a2a3_starlike(double b1, double b2, cplx p1, cplx p2) {
  return {0.5 * b1 * p1, ((b1 * b1 - b1 + b2) * p1 * p1 + 2.0 * b1 * p2) / 8.0};
}

CoeffPair a2a3_starlike(double b1, double b2, const SamplePoint& s) {
  return a2a3_starlike(b1, b2, cplx{s.p1}, s.p2());
}

CoeffPair a2a3_convex(double b1, double b2, cplx p1, cplx p2) {
  return {0.25 * b1 * p1, ((b1 * b1 - b1 + b2) * p1 * p1 + 2.0 * b1 * p2) / 24.0};
}

CoeffPair a2a3_convex(double b1, double b2, const SamplePoint& s) {
  return a2a3_convex(b1, b2, cplx{s.p1}, s.p2());
}

CoeffPair a2a3_ctc(cplx b2, cplx b3, cplx p1, cplx p2) {
  return {0.5 * (b2 + p1), (b3 + b2 * p1 + p2) / 3.0};
}

Series coeffs_starlike(const MindaGenerator& phi, const Series& omega) {
  // z f' = f (1 + c)  =>  (n-1) a_n = sum_{k=1}^{n-1} c_k a_{n-k}
  const Series c = compose(phi.series, omega);
  const auto n = c.order() + 1;
  Series f(n);
  f[1] = 1.0;
  for (std::size_t m = 2; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k < m; ++k) acc += c[k] * f[m - k];
    f[m] = acc / static_cast<double>(m - 1);
  }
  return f;
}

Series coeffs_convex(const MindaGenerator& phi, const Series& omega) {
  // q = f': z q' = q c  =>  m q_m = sum_{k=1}^{m} c_k q_{m-k}; a_{m+1} = q_m/(m+1)
  const Series c = compose(phi.series, omega);
  const auto n = c.order();
  Series q(n);
  q[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    cplx acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += c[k] * q[m - k];
    q[m] = acc / static_cast<double>(m);
  }
  return antiderivative(q);
}

Series schwarz_from_caratheodory(cplx p1, cplx p2, std::size_t order) {
  const Series p(order, {1.0, p1, p2});
  return div(p - Series::constant(1.0, order), p + Series::constant(1.0, order));
}

std::string_view to_string(ExtremalId id) {
  switch (id) {
    case ExtremalId::Identity: return "identity";
    case ExtremalId::F1: return "f1";
    case ExtremalId::F2: return "f2";
    case ExtremalId::F3: return "f3";
    case ExtremalId::F4: return "f4";
    case ExtremalId::F5: return "f5";
    case ExtremalId::F6: return "f6";
    case ExtremalId::F7: return "f7";
  }
  return "?";
}

ExtremalId parse_extremal(std::string_view text) {
  for (auto id : {ExtremalId::Identity, ExtremalId::F1, ExtremalId::F2, ExtremalId::F3, ExtremalId::F4,
                  ExtremalId::F5, ExtremalId::F6, ExtremalId::F7})
    if (to_string(id) == text) return id;
  throw Error(ErrorKind::Parse, "unknown extremal '" + std::string(text) + "'");
}

std::optional<FamilyKind> extremal_family(ExtremalId id) {
  switch (id) {
    case ExtremalId::F1:
    case ExtremalId::F2: return FamilyKind::Starlike;
    case ExtremalId::F3:
    case ExtremalId::F4: return FamilyKind::Convex;
    case ExtremalId::F5:
    case ExtremalId::F6:
    case ExtremalId::F7: return FamilyKind::CloseToConvex;
    case ExtremalId::Identity: return std::nullopt;
  }
  return std::nullopt;
}

Series extremal(ExtremalId id, const FamilySpec& ctx) {
  const auto fam = extremal_family(id);
  if (fam && *fam != ctx.kind)
    throw Error(ErrorKind::IncompatibleExtremal,
                std::string(to_string(id)) + " is not an extremal of the " + std::string(to_string(ctx.kind)) + " family");
  const std::size_t n = ctx.generator ? ctx.generator->series.order() : ctx.base->order();

  // exp int_0^z (phi(t) - 1)/t dt, i.e. z f'/f for f1 and f' for f3.
  const auto log_derivative_exp = [&](bool squared) {
    const Series& phi = ctx.generator->series;
    const Series arg = squared ? compose(phi, Series(n, {0.0, 0.0, 1.0})) : phi;
    return exp_series(integrate_shifted(arg));
  };

  switch (id) {
    case ExtremalId::Identity: return Series::variable(n);
    case ExtremalId::F1: return shift_up(log_derivative_exp(false)).truncated(n);
    case ExtremalId::F2: return shift_up(log_derivative_exp(true)).truncated(n);
    case ExtremalId::F3: return antiderivative(log_derivative_exp(false)).truncated(n);
    case ExtremalId::F4: return antiderivative(log_derivative_exp(true)).truncated(n);
    case ExtremalId::F5: {
      // f' = (g/z)(1+z)/(1-z)
      const Series h = shift_down(*ctx.base);
      const auto m = h.order();
      return antiderivative(mul(h, div(Series(m, {1.0, 1.0}), Series(m, {1.0, -1.0}))));
    }
    case ExtremalId::F6: {
      // f' = (1+z^3) / ((1-z^3)(1-z)^2)
      const Series num(n, {1.0, 0.0, 0.0, 1.0});
      const Series den = mul(Series(n, {1.0, 0.0, 0.0, -1.0}), Series(n, {1.0, -2.0, 1.0}));
      return antiderivative(div(num, den)).truncated(n);
    }
    case ExtremalId::F7: {
      // z f' = g~ (1+iz)/(1-iz) with g~ = z + sum i^{n-1} b_n z^n, i.e. g~(z) = -i g(iz)
      const cplx i{0.0, 1.0};
      const Series rotated = scale_argument(*ctx.base, i) * (-i);
      const Series h = shift_down(rotated);
      const auto m = h.order();
      return antiderivative(mul(h, div(Series(m, {1.0, i}), Series(m, {1.0, -i}))));
    }
  }
  throw Error(ErrorKind::IncompatibleExtremal, "unhandled extremal");
}

}  // namespace tsharp
