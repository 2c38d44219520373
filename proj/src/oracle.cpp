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

#include "xdeficit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "xdeficit/xstate.hpp"

namespace xdeficit::oracle {
namespace {

constexpr double kEigenClamp = 1e-10;

template <std::size_t N>
Matrix<N> multiply_n(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// I (x) pi, acting on qubit B.
Matrix4 lift_to_b(const Matrix2& pi) {
  Matrix4 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t bp = 0; bp < 2; ++bp) out[2 * a + b][2 * a + bp] = pi[b][bp];
  return out;
}

using RealMatrix8 = std::array<std::array<double, 8>, 8>;

// Cyclic Jacobi for a real symmetric matrix; returns the diagonal after
// convergence.
std::array<double, 8> jacobi_symmetric(RealMatrix8 a) {
  constexpr std::size_t n = 8;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    }
    if (off <= 1e-32 * std::max(total, 1e-300)) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, 8> diag{};
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][i];
  return diag;
}

}  // namespace

double DensityMatrix4::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < 4; ++i) t += entries[i][i].real();
  return t;
}

double DensityMatrix4::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(entries[i][j] - std::conj(entries[j][i])));
  return worst;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) { return multiply_n(a, b); }
Matrix4 multiply(const Matrix4& a, const Matrix4& b) { return multiply_n(a, b); }

Matrix4 adjoint(const Matrix4& a) {
  Matrix4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = std::conj(a[j][i]);
  return out;
}

DensityMatrix4 build_density(const StateParams& p) {
  DensityMatrix4 rho;
  const double sum = p.q1() + p.q2();
  const double diff = p.q1() - p.q2();
  rho.entries[0][0] = p.rest();
  rho.entries[1][1] = sum / 2.0;
  rho.entries[2][2] = sum / 2.0;
  rho.entries[1][2] = diff / 2.0;
  rho.entries[2][1] = diff / 2.0;
  return rho;
}

std::pair<Projector2, Projector2> projectors(double theta, double phi) {
  const double ch = std::cos(theta / 2.0);
  const double sh = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  // Columns of V are the measurement basis vectors.
  const std::array<Complex, 2> v0{ch, phase * sh};
  const std::array<Complex, 2> v1{-std::conj(phase) * sh, ch};

  auto outer = [&](const std::array<Complex, 2>& v) {
    Projector2 pr;
    pr.theta = theta;
    pr.phi = phi;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) pr.entries[i][j] = v[i] * std::conj(v[j]);
    return pr;
  };
  return {outer(v0), outer(v1)};
}

DensityMatrix4 post_measured_state(const DensityMatrix4& rho, double theta, double phi) {
  const auto [pi0, pi1] = projectors(theta, phi);
  DensityMatrix4 out;
  for (const Projector2* pr : {&pi0, &pi1}) {
    const Matrix4 lifted = lift_to_b(pr->entries);
    const Matrix4 term = multiply(multiply(lifted, rho.entries), adjoint(lifted));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out.entries[i][j] += term[i][j];
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const DensityMatrix4& m) {
  if (m.hermiticity_defect() > 1e-10) {
    throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian");
  }
  RealMatrix8 embed{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // Symmetrize to wash out sub-tolerance defects.
      const Complex h = 0.5 * (m.entries[i][j] + std::conj(m.entries[j][i]));
      embed[i][j] = h.real();
      embed[i + 4][j + 4] = h.real();
      embed[i][j + 4] = -h.imag();
      embed[i + 4][j] = h.imag();
    }
  }
  std::array<double, 8> doubled = jacobi_symmetric(embed);
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  // Each eigenvalue of the Hermitian matrix appears twice.
  return {doubled[0], doubled[2], doubled[4], doubled[6]};
}

double oracle_post_entropy(const StateParams& p, double theta, double phi) {
  const DensityMatrix4 measured = post_measured_state(build_density(p), theta, phi);
  std::array<double, 4> ev = hermitian_eigenvalues(measured);
  for (double& v : ev) {
    if (v < 0.0 && v >= -kEigenClamp) v = 0.0;
  }
  return quaternary_entropy(std::span<const double, 4>(ev));
}

}  // namespace xdeficit::oracle
