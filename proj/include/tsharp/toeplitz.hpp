#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "tsharp/series.hpp"

namespace tsharp {

// T_{m,n}(f): entry (j, k) is a_{n+k-j} on and above the diagonal and
// conj(a_{n+j-k}) below it. coeffs[k] holds a_k (coeffs[1] = 1 for normalized f).
struct ToeplitzSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  std::span<const cplx> coeffs;
};

using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

ComplexMatrix toeplitz_matrix(const ToeplitzSpec& spec);

// Pivoted LU determinant. Throws InsufficientCoefficients when a_{n+m-1} is missing.
cplx det_general(const ToeplitzSpec& spec);

// 1 - |a2|^2
double det_t21(cplx a2);
// 2 Re(a2^2 conj(a3)) - 2 |a2|^2 - |a3|^2 + 1
double det_t31(cplx a2, cplx a3);
// a2^2 - |a3|^2
cplx det_t22(cplx a2, cplx a3);
double abs_det_t22(cplx a2, cplx a3);

}  // namespace tsharp
