#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "tsharp/error.hpp"
#include "tsharp/toeplitz.hpp"

using namespace tsharp;

namespace {

std::array<cplx, 6> random_coeffs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::array<cplx, 6> a{};
  a[1] = 1.0;
  for (std::size_t k = 2; k < a.size(); ++k) a[k] = {u(rng), u(rng)};
  return a;
}

// Cofactor expansion of a 3x3 complex determinant.
cplx det3(const ComplexMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("matrix layout") {
  const std::array<cplx, 5> a{0.0, 1.0, cplx{2.0, 1.0}, cplx{3.0, -1.0}, 4.0};
  const ComplexMatrix t = toeplitz_matrix({3, 1, a});
  CHECK(t(0, 0) == cplx{1.0});
  CHECK(t(0, 2) == a[3]);
  CHECK(t(2, 0) == std::conj(a[3]));
  CHECK(t(1, 0) == std::conj(a[2]));
  CHECK((t - t.adjoint()).norm() == 0.0);

  const ComplexMatrix t22 = toeplitz_matrix({2, 2, a});
  CHECK(t22(0, 0) == a[2]);
  CHECK(t22(0, 1) == a[3]);
  CHECK(t22(1, 0) == std::conj(a[3]));

  CHECK_THROWS_AS(toeplitz_matrix({3, 3, a}), Error);
  CHECK_NOTHROW(toeplitz_matrix({3, 2, a}));
}

TEST_CASE("closed forms agree with the pivoted determinant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_coeffs(rng);
    const cplx d21 = det_general({2, 1, a});
    const cplx d31 = det_general({3, 1, a});
    const cplx d22 = det_general({2, 2, a});
    const double scale = 1.0 + std::norm(a[2]) * std::norm(a[2]) + std::norm(a[3]);
    CHECK(std::abs(d21 - det_t21(a[2])) < 1e-12 * scale);
    CHECK(std::abs(d31 - det_t31(a[2], a[3])) < 1e-12 * scale);
    CHECK(std::abs(d22 - det_t22(a[2], a[3])) < 1e-12 * scale);
    CHECK(std::abs(d31 - det3(toeplitz_matrix({3, 1, a}))) < 1e-12 * scale);
    CHECK(std::abs(d31.imag()) < 1e-12 * scale);
  }
}

TEST_CASE("closed forms at known points") {
  CHECK(det_t21(2.0) == -3.0);
  CHECK(det_t31(2.0, 3.0) == 8.0);
  CHECK(det_t31(0.0, 0.0) == 1.0);
  CHECK(abs_det_t22(cplx{0.0, 1.5}, -5.0 / 3.0) == doctest::Approx(181.0 / 36.0).epsilon(1e-15));
}

TEST_CASE("T_{m,1} is invariant under rotation") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_coeffs(rng);
    const double t = angle(rng);
    auto r = a;
    for (std::size_t n = 1; n < r.size(); ++n) r[n] *= std::polar(1.0, static_cast<double>(n - 1) * t);
    CHECK(std::abs(det_t21(r[2]) - det_t21(a[2])) < 1e-10);
    CHECK(std::abs(det_t31(r[2], r[3]) - det_t31(a[2], a[3])) < 1e-10);
    const double scale = 1.0 + std::abs(det_general({4, 1, a}));
    CHECK(std::abs(det_general({4, 1, r}) - det_general({4, 1, a})) < 1e-10 * scale);
  }
}
