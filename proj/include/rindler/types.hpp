#pragma once

#include <complex>

#include <Eigen/Dense>

namespace rindler {

using Scalar = double;
using Complex = std::complex<Scalar>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Entrywise Hermiticity tolerance for state matrices.
inline constexpr Scalar kHermitianTol = 1e-12;
// Spectrum floor: eigenvalues in [-kEigenvalueFloor, 0) are truncation noise
// and clip to zero; anything below marks an invalid state, not a warning.
inline constexpr Scalar kEigenvalueFloor = 1e-10;
inline constexpr Scalar kTraceTol = 1e-10;
// |x|^2 must match 1 to this tolerance before a Bloch vector is renormalized.
inline constexpr Scalar kBlochUnitTol = 1e-12;
// Measurement outcomes below this probability are dropped, not normalized.
inline constexpr Scalar kZeroProbability = 1e-14;

enum class Side { A, B };

struct BipartiteDims {
  Index dim_a{1};
  Index dim_b{1};

  Index joint() const { return dim_a * dim_b; }
};

// Bipartite density matrix together with the probability mass lost to Fock
// truncation. Truncated states are kept unnormalized so that
// trace(matrix) + tail_mass == 1; consumers renormalize explicitly if they
// want to, never silently.
struct DensityOperator {
  ComplexMatrix matrix;
  BipartiteDims dims{1, 1};
  Scalar tail_mass{0.0};
};

}  // namespace rindler
