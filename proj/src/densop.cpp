// Copyright 2026 The qtp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtp/densop.hpp"

#include <cmath>

namespace qtp::densop {

namespace {

using Complex = std::complex<double>;

int slot_count(Eigen::Index dim) {
  switch (dim) {
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    default:
      throw DimensionMismatch("operator dimension must be 2, 4 or 8");
  }
}

}  // namespace

const CMat& pauli(int i) {
  static const CMat x = [] {
    CMat m(2, 2);
    m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    return m;
  }();
  static const CMat y = [] {
    CMat m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
  }();
  static const CMat z = [] {
    CMat m(2, 2);
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return m;
  }();
  switch (i) {
    case 1:
      return x;
    case 2:
      return y;
    case 3:
      return z;
    default:
      throw OutOfRange("pauli index must be in 1..3");
  }
}

CMat identity(int dim) { return CMat::Identity(dim, dim); }

CMat kron(const CMat& a, const CMat& b) {
  const Eigen::Index na = a.rows(), nb = b.rows();
  if (a.cols() != na || b.cols() != nb) throw DimensionMismatch("kron needs square inputs");
  CMat out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
  return out;
}

CMat partial_trace(const CMat& rho, int slot) {
  const Eigen::Index dim = rho.rows();
  if (rho.cols() != dim) throw DimensionMismatch("partial_trace needs a square input");
  const int k = slot_count(dim);
  if (k < 2) throw DimensionMismatch("cannot trace a single-qubit operator");
  if (slot < 0 || slot >= k) throw DimensionMismatch("invalid subsystem slot");

  const Eigen::Index out_dim = dim / 2;
  // Bit s of an index, counting slot 0 as the most significant bit.
  const int shift = k - 1 - slot;
  CMat out = CMat::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Eigen::Index bi = (i >> shift) & 1, bj = (j >> shift) & 1;
      if (bi != bj) continue;
      const Eigen::Index low_mask = (Eigen::Index(1) << shift) - 1;
      const Eigen::Index ri = ((i >> (shift + 1)) << shift) | (i & low_mask);
      const Eigen::Index rj = ((j >> (shift + 1)) << shift) | (j & low_mask);
      out(ri, rj) += rho(i, j);
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const CMat& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool is_positive(const CMat& rho, double tolerance) {
  return hermitian_eigenvalues(rho).minCoeff() >= -tolerance;
}

CMat fano_to_density(const TwoQubitFano& f) {
  CMat rho = identity(4);
  for (int i = 1; i <= 3; ++i) {
    rho += f.r_a[i - 1] * kron(pauli(i), identity(2));
    rho += f.r_b[i - 1] * kron(identity(2), pauli(i));
    for (int j = 1; j <= 3; ++j) rho += f.corr(i - 1, j - 1) * kron(pauli(i), pauli(j));
  }
  return 0.25 * rho;
}

TwoQubitFano density_to_fano(const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionMismatch("expected a 4x4 operator");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::ORACLE)
    throw NotHermitian("operator is not Hermitian");
  if (std::abs(rho.trace() - Complex(1, 0)) > tol::ORACLE)
    throw NotUnitTrace("operator trace is not 1");

  TwoQubitFano f;
  for (int i = 1; i <= 3; ++i) {
    f.r_a[i - 1] = (rho * kron(pauli(i), identity(2))).trace().real();
    f.r_b[i - 1] = (rho * kron(identity(2), pauli(i))).trace().real();
    for (int j = 1; j <= 3; ++j)
      f.corr(i - 1, j - 1) = (rho * kron(pauli(i), pauli(j))).trace().real();
  }
  return f;
}

CMat density_from_bloch(const Vec3& t) {
  CMat rho = identity(2);
  for (int i = 1; i <= 3; ++i) rho += t[i - 1] * pauli(i);
  return 0.5 * rho;
}

Vec3 bloch_from_density(const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionMismatch("expected a 2x2 operator");
  Vec3 t;
  for (int i = 1; i <= 3; ++i) t[i - 1] = (rho * pauli(i)).trace().real();
  return t;
}

CMat apply_affine(const AffineChannel& ch, const CMat& op) {
  if (op.rows() != 2 || op.cols() != 2) throw DimensionMismatch("expected a 2x2 operator");
  // Pauli coefficients of op: op = c0 * 1 + sum_k c_k sigma_k.
  const Complex c0 = 0.5 * op.trace();
  CMat out = c0 * identity(2);
  for (int k = 1; k <= 3; ++k) out += c0 * ch.v[k - 1] * pauli(k);
  for (int k = 1; k <= 3; ++k) {
    const Complex ck = 0.5 * (pauli(k) * op).trace();
    for (int l = 1; l <= 3; ++l) out += ck * ch.lambda(l - 1, k - 1) * pauli(l);
  }
  return out;
}

CMat apply_local_oracle(const AffineChannel& ca, const AffineChannel& cb, const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionMismatch("expected a 4x4 operator");
  CMat out = CMat::Zero(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CMat eij = CMat::Zero(2, 2);
      eij(i, j) = Complex(1, 0);
      for (Eigen::Index k = 0; k < 2; ++k) {
        for (Eigen::Index l = 0; l < 2; ++l) {
          CMat ekl = CMat::Zero(2, 2);
          ekl(k, l) = Complex(1, 0);
          const Complex coeff = rho(2 * i + k, 2 * j + l);
          if (coeff == Complex(0, 0)) continue;
          out += coeff * kron(apply_affine(ca, eij), apply_affine(cb, ekl));
        }
      }
    }
  }
  return out;
}

CMat choi_of_affine(const AffineChannel& ch) {
  CMat choi = CMat::Zero(4, 4);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CMat eij = CMat::Zero(2, 2);
      eij(i, j) = Complex(1, 0);
      choi += kron(eij, apply_affine(ch, eij));
    }
  }
  return choi;
}

Mat2c unitary_from_rotation(const Rotation& r) {
  const Mat3& m = r.matrix();
  const double cos_theta = std::clamp((m.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(cos_theta);

  Vec3 axis;
  if (theta < 1e-8) {
    axis = Vec3(0, 0, 1);  // arbitrary; the rotation is (nearly) trivial
  } else if (M_PI - theta < 1e-6) {
    // Near theta = pi the skew part degenerates; use (m + 1)/2 = n n^T.
    const Mat3 outer = 0.5 * (m + Mat3::Identity());
    int imax = 0;
    outer.diagonal().maxCoeff(&imax);
    axis = outer.col(imax) / std::sqrt(outer(imax, imax));
    axis.normalize();
  } else {
    axis = Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
    axis /= (2.0 * std::sin(theta));
    axis.normalize();
  }

  // U = cos(theta/2) 1 - i sin(theta/2) n.sigma; trace 2 cos(theta/2) >= 0
  // for theta in [0, pi], which fixes the two-fold lift ambiguity.
  Mat2c u = std::cos(theta / 2.0) * Mat2c::Identity();
  const Complex mi(0, -1);
  const std::array<Mat2c, 3> sigma = {Mat2c(pauli(1)), Mat2c(pauli(2)), Mat2c(pauli(3))};
  for (int k = 0; k < 3; ++k) u += mi * std::sin(theta / 2.0) * axis[k] * sigma[k];
  return u;
}

}  // namespace qtp::densop
