// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <complex>
#include <functional>

namespace xxz {

using cplx = std::complex<double>;

struct Matrix2 {
  std::array<cplx, 4> e{};
  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 2 + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 2 + c)]; }
};

// Dense 4x4 complex matrix, row-major. The basis convention throughout the
// library is {|11>, |10>, |01>, |00>} with |1> = spin-up on each site.
struct Matrix4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 4 + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 4 + c)]; }

  static Matrix4 identity();
  static Matrix4 zero() { return Matrix4{}; }

  Matrix4 adjoint() const;
  Matrix4 conjugate() const;
  cplx trace() const;
  double max_abs() const;
  bool is_finite() const;
};

Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix4 operator-(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(cplx s, const Matrix4& a);

using Vec4 = std::array<cplx, 4>;

Vec4 mul(const Matrix4& m, const Vec4& v);
cplx inner(const Vec4& a, const Vec4& b);  // <a|b>
double norm(const Vec4& v);
Matrix4 projector(const Vec4& v);  // |v><v|

// max_{rc} |a(r,c) - b(r,c)|
double max_abs_diff(const Matrix4& a, const Matrix4& b);
// max_{rc} |m(r,c) - conj(m(c,r))|
double hermiticity_defect(const Matrix4& m);

struct HermitianEigen {
  std::array<double, 4> values;  // ascending
  Matrix4 vectors;               // orthonormal columns, vectors(:,k) <-> values[k]
};

// Cyclic Jacobi eigensolver for 4x4 Hermitian matrices. Throws
// std::invalid_argument when the input fails the Hermiticity check
// (defect > 1e-10); the message carries the defect norm.
HermitianEigen hermitian_eigendecompose(const Matrix4& m);

// V f(L) V† for Hermitian m. Throws std::domain_error when f produces a
// non-finite value on the spectrum.
Matrix4 matrix_function(const Matrix4& m, const std::function<double(double)>& f);

// Spectral square root with the PSD rounding clamp: eigenvalues in
// [-1e-10, 0) are treated as 0, anything more negative is a domain error.
Matrix4 matrix_sqrt_psd(const Matrix4& m);

// Kronecker product; the first factor acts on qubit 1.
Matrix4 kron2(const Matrix2& a, const Matrix2& b);

// 0: identity, 1: sigma_x, 2: sigma_y, 3: sigma_z, all in the {|1>, |0>}
// single-qubit basis (sigma_z |1> = +|1>).
Matrix2 pauli(int i);

}  // namespace xxz
