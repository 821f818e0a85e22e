// SPDX-License-Identifier: MIT
#include "xxz/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xxz {

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Matrix4 Matrix4::conjugate() const {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = std::conj(e[i]);
  return r;
}

cplx Matrix4::trace() const {
  return e[0] + e[5] + e[10] + e[15];
}

double Matrix4::max_abs() const {
  double m = 0.0;
  for (const auto& v : e) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix4::is_finite() const {
  for (const auto& v : e)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Matrix4 operator*(cplx s, const Matrix4& a) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
  return r;
}

Vec4 mul(const Matrix4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < 4; ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

cplx inner(const Vec4& a, const Vec4& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vec4& v) {
  return std::sqrt(std::real(inner(v, v)));
}

Matrix4 projector(const Vec4& v) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  return r;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double hermiticity_defect(const Matrix4& m) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

namespace {

// One two-sided unitary rotation annihilating a(p,q). The rotation is the
// product of a phase on column q and a real Jacobi rotation in the (p,q)
// plane; it is applied to a (rows and columns) and accumulated into v.
void jacobi_rotate(Matrix4& a, Matrix4& v, int p, int q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx u = apq / mag;  // a(p,q) = mag * u

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // G(p,p) = c, G(p,q) = s, G(q,p) = -s*conj(u), G(q,q) = c*conj(u)
  const cplx gqp = -s * std::conj(u);
  const cplx gqq = c * std::conj(u);

  for (int r = 0; r < 4; ++r) {  // A <- A G
    const cplx arp = a(r, p), arq = a(r, q);
    a(r, p) = c * arp + gqp * arq;
    a(r, q) = s * arp + gqq * arq;
  }
  for (int col = 0; col < 4; ++col) {  // A <- G† A
    const cplx apc = a(p, col), aqc = a(q, col);
    a(p, col) = c * apc + std::conj(gqp) * aqc;
    a(q, col) = s * apc + std::conj(gqq) * aqc;
  }
  for (int r = 0; r < 4; ++r) {  // V <- V G
    const cplx vrp = v(r, p), vrq = v(r, q);
    v(r, p) = c * vrp + gqp * vrq;
    v(r, q) = s * vrp + gqq * vrq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

double offdiag_max(const Matrix4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

HermitianEigen hermitian_eigendecompose(const Matrix4& m) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= 1e-10 * std::max(1.0, m.max_abs()))) {
    std::ostringstream os;
    os << "hermitian_eigendecompose: input is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }
  if (!m.is_finite())
    throw std::invalid_argument("hermitian_eigendecompose: non-finite entries");

  // Symmetrize away the admitted sub-tolerance defect.
  Matrix4 a = 0.5 * (m + m.adjoint());
  Matrix4 v = Matrix4::identity();

  const double tol = 1e-15 * std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 64 && offdiag_max(a) > tol; ++sweep) {
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        if (std::abs(a(p, q)) > tol * 1e-2) jacobi_rotate(a, v, p, q);
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  for (int k = 0; k < 4; ++k) {
    out.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                order[static_cast<std::size_t>(k)]).real();
    for (int r = 0; r < 4; ++r)
      out.vectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
  }
  return out;
}

Matrix4 matrix_function(const Matrix4& m, const std::function<double(double)>& f) {
  const HermitianEigen eig = hermitian_eigendecompose(m);
  std::array<double, 4> fv{};
  for (std::size_t k = 0; k < 4; ++k) {
    fv[k] = f(eig.values[k]);
    if (!std::isfinite(fv[k])) {
      std::ostringstream os;
      os << "matrix_function: f not finite at eigenvalue " << eig.values[k];
      throw std::domain_error(os.str());
    }
  }
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k)
        s += eig.vectors(i, k) * fv[static_cast<std::size_t>(k)] * std::conj(eig.vectors(j, k));
      r(i, j) = s;
    }
  return r;
}

Matrix4 matrix_sqrt_psd(const Matrix4& m) {
  return matrix_function(m, [](double x) {
    if (x < -1e-10) throw std::domain_error("matrix_sqrt_psd: eigenvalue below PSD clamp");
    return std::sqrt(std::max(x, 0.0));
  });
}

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Matrix2 pauli(int i) {
  Matrix2 m;
  const cplx im{0.0, 1.0};
  switch (i) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -im; m(1, 0) = im; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

}  // namespace xxz
