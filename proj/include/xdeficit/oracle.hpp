// Copyright 2026 The xdeficit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force measurement path: build the 4x4 density matrix explicitly,
// apply a rank-1 projective measurement on qubit B and diagonalize. This
// shares no formulas with xstate.hpp and is used to check it.

#ifndef XDEFICIT_ORACLE_HPP
#define XDEFICIT_ORACLE_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

#include "xdeficit/state.hpp"

namespace xdeficit::oracle {

using Complex = std::complex<double>;

template <std::size_t N>
using Matrix = std::array<std::array<Complex, N>, N>;

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Density matrix in the basis |00>, |01>, |10>, |11> (index 2*a + b).
struct DensityMatrix4 {
  Matrix4 entries{};

  double trace() const;
  /// Largest |m_ij - conj(m_ji)|.
  double hermiticity_defect() const;
};

struct Projector2 {
  Matrix2 entries{};
  double theta = 0.0;
  double phi = 0.0;
};

DensityMatrix4 build_density(const StateParams& p);

/// Pi_k = V |k><k| V^+ with V the SU(2) rotation for polar angle theta and
/// azimuth phi.
std::pair<Projector2, Projector2> projectors(double theta, double phi);

/// sum_k (I x Pi_k) rho (I x Pi_k)^+.
DensityMatrix4 post_measured_state(const DensityMatrix4& rho, double theta, double phi);

/// Eigenvalues of a Hermitian 4x4 matrix in descending order. Uses cyclic
/// Jacobi on the 8x8 real symmetric embedding [[X, -Y], [Y, X]].
/// Throws NotHermitian when the defect exceeds 1e-10.
std::array<double, 4> hermitian_eigenvalues(const DensityMatrix4& m);

/// Entropy in bits of the measured state, computed through the explicit
/// matrices.
double oracle_post_entropy(const StateParams& p, double theta, double phi);

Matrix2 multiply(const Matrix2& a, const Matrix2& b);
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 adjoint(const Matrix4& a);

}  // namespace xdeficit::oracle

#endif  // XDEFICIT_ORACLE_HPP
