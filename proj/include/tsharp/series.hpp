#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tsharp {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 12;

// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex
// coefficients. Binary operations truncate to the smaller order.
class Series {
 public:
  explicit Series(std::size_t order = kDefaultOrder) : coeffs_(order + 1) {}
  Series(std::size_t order, std::initializer_list<cplx> leading);
  Series(std::size_t order, std::span<const cplx> leading);

  static Series constant(cplx c, std::size_t order = kDefaultOrder);
  // The series z.
  static Series variable(std::size_t order = kDefaultOrder);
  // sum_{k=0}^{N} z^k
  static Series geometric(std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  // Coefficients past the truncation order read as zero.
  cplx operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  cplx& operator[](std::size_t k) { return coeffs_.at(k); }

  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  Series truncated(std::size_t order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(cplx s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, cplx s) { return a *= s; }
  friend Series operator*(cplx s, Series a) { return a *= s; }
  friend Series operator-(Series a) { return a *= -1.0; }

  bool operator==(const Series&) const = default;

 private:
  std::vector<cplx> coeffs_;
};

Series mul(const Series& a, const Series& b);
// Throws ZeroConstantTerm when b(0) == 0.
Series div(const Series& a, const Series& b);
// outer(inner(z)); throws NonzeroInnerConstant when inner(0) != 0.
Series compose(const Series& outer, const Series& inner);

Series exp_series(const Series& a);
// log and sqrt require a(0) == 1 (BadConstantTerm otherwise).
Series log_series(const Series& a);
Series sqrt_series(const Series& a);
// exp(alpha log a), same precondition as log_series.
Series pow_series(const Series& a, double alpha);

// int_0^z (a(t) - a(0)) / t dt
Series integrate_shifted(const Series& a);
// int_0^z a(t) dt. One order higher than the input.
Series antiderivative(const Series& a);
// z a(z). One order higher than the input.
Series shift_up(const Series& a);
// a(z) / z for a(0) == 0. One order lower than the input.
Series shift_down(const Series& a);
// a(c z)
Series scale_argument(const Series& a, cplx c);

inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

// Largest coefficient-wise |a_k - b_k| over the common order.
double max_abs_diff(const Series& a, const Series& b);

}  // namespace tsharp
