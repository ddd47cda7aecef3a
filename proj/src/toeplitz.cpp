#include "tsharp/toeplitz.hpp"

#include <string>

#include "tsharp/error.hpp"

namespace tsharp {

ComplexMatrix toeplitz_matrix(const ToeplitzSpec& spec) {
  if (spec.m == 0 || spec.n == 0) throw Error(ErrorKind::BadParams, "Toeplitz size and start index must be >= 1");
  if (spec.coeffs.size() < spec.n + spec.m)
    throw Error(ErrorKind::InsufficientCoefficients,
                "T_{" + std::to_string(spec.m) + "," + std::to_string(spec.n) + "} needs a_" +
                    std::to_string(spec.n + spec.m - 1));
  const auto m = static_cast<Eigen::Index>(spec.m);
  ComplexMatrix t(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k)
      t(j, k) = k >= j ? spec.coeffs[spec.n + static_cast<std::size_t>(k - j)]
                       : std::conj(spec.coeffs[spec.n + static_cast<std::size_t>(j - k)]);
  return t;
}

cplx det_general(const ToeplitzSpec& spec) {
  const ComplexMatrix t = toeplitz_matrix(spec);
  return t.partialPivLu().determinant();
}

double det_t21(cplx a2) { return 1.0 - std::norm(a2); }

double det_t31(cplx a2, cplx a3) {
  return 2.0 * (a2 * a2 * std::conj(a3)).real() - 2.0 * std::norm(a2) - std::norm(a3) + 1.0;
}

cplx det_t22(cplx a2, cplx a3) { return a2 * a2 - std::norm(a3); }

double abs_det_t22(cplx a2, cplx a3) { return std::abs(det_t22(a2, a3)); }

}  // namespace tsharp
