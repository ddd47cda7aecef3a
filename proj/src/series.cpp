#include "tsharp/series.hpp"

#include <algorithm>
#include <cmath>

#include "tsharp/error.hpp"

namespace tsharp {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_unit(const Series& a, const char* op) {
  if (std::abs(a[0] - 1.0) > kUnitTolerance)
    throw Error(ErrorKind::BadConstantTerm, std::string(op) + " needs constant term 1");
}

}  // namespace

Series::Series(std::size_t order, std::initializer_list<cplx> leading)
    : Series(order, std::span<const cplx>(leading.begin(), leading.size())) {}

Series::Series(std::size_t order, std::span<const cplx> leading) : coeffs_(order + 1) {
  const auto n = std::min(leading.size(), coeffs_.size());
  std::copy_n(leading.begin(), n, coeffs_.begin());
}

Series Series::constant(cplx c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

Series Series::geometric(std::size_t order) {
  Series s(order);
  std::fill(s.coeffs_.begin(), s.coeffs_.end(), cplx{1.0});
  return s;
}

Series Series::truncated(std::size_t order) const {
  return Series(order, std::span<const cplx>(coeffs_).first(std::min(order + 1, coeffs_.size())));
}

Series& Series::operator+=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series& Series::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series mul(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series div(const Series& a, const Series& b) {
  if (std::abs(b[0]) == 0.0) throw Error(ErrorKind::ZeroConstantTerm, "division by a series with b(0) = 0");
  const auto n = std::min(a.order(), b.order());
  Series q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    cplx acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != cplx{}) throw Error(ErrorKind::NonzeroInnerConstant, "inner series must vanish at 0");
  const auto n = std::min(outer.order(), inner.order());
  const auto w = inner.truncated(n);
  Series r = Series::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = mul(r, w);
    r[0] += outer[k];
  }
  return r;
}

Series exp_series(const Series& a) {
  // e' = a' e  =>  k e_k = sum_{j=1}^{k} j a_j e_{k-j}
  const auto n = a.order();
  Series e(n);
  e[0] = std::exp(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

Series log_series(const Series& a) {
  require_unit(a, "log_series");
  // a l' = a'  =>  k l_k a_0 = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  const auto n = a.order();
  Series l(n);
  l[0] = std::log(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = acc / (static_cast<double>(k) * a[0]);
  }
  return l;
}

Series sqrt_series(const Series& a) {
  require_unit(a, "sqrt_series");
  const auto n = a.order();
  Series s(n);
  s[0] = std::sqrt(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / (2.0 * s[0]);
  }
  return s;
}

Series pow_series(const Series& a, double alpha) {
  return exp_series(log_series(a) * cplx{alpha});
}

Series integrate_shifted(const Series& a) {
  Series r(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) r[k] = a[k] / static_cast<double>(k);
  return r;
}

Series antiderivative(const Series& a) {
  Series r(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) r[k + 1] = a[k] / static_cast<double>(k + 1);
  return r;
}

Series shift_up(const Series& a) {
  Series r(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) r[k + 1] = a[k];
  return r;
}

Series shift_down(const Series& a) {
  if (a[0] != cplx{}) throw Error(ErrorKind::NonzeroInnerConstant, "shift_down needs a(0) = 0");
  if (a.order() == 0) return Series(0);
  Series r(a.order() - 1);
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k + 1];
  return r;
}

Series scale_argument(const Series& a, cplx c) {
  Series r = a;
  cplx p = 1.0;
  for (std::size_t k = 0; k <= a.order(); ++k, p *= c) r[k] = a[k] * p;
  return r;
}

double max_abs_diff(const Series& a, const Series& b) {
  const auto n = std::min(a.order(), b.order());
  double m = 0.0;
  for (std::size_t k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace tsharp
