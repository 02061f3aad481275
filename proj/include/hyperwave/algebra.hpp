#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "hyperwave/bicomplex.hpp"

namespace hyperwave {

/// Member of the hyperbolic Pauli algebra (the 2x2 matrix representation of
/// the real Clifford algebra of signature (3,0) over bicomplex coefficients).
template <typename Real = double>
using Element = Eigen::Matrix<Bicomplex<Real>, 2, 2>;

using Elementd = Element<double>;

template <typename Real = double>
Element<Real> identity() {
  return Element<Real>::Identity();
}

template <typename Real = double>
Element<Real> zero_element() {
  return Element<Real>::Zero();
}

/// Standard Pauli matrix sigma_k, k in 1..3. Entries lie in the i-plane only.
template <typename Real = double>
Element<Real> pauli(int k) {
  using B = Bicomplex<Real>;
  Element<Real> m;
  switch (k) {
    case 1:
      m << B(0), B(1), B(1), B(0);
      break;
    case 2:
      m << B(0), -unit_i<Real>, unit_i<Real>, B(0);
      break;
    case 3:
      m << B(1), B(0), B(0), B(-1);
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return m;
}

/// Basis paravector e_mu: e_0 = identity, e_k = j * sigma_k.
template <typename Real = double>
Element<Real> basis(int mu) {
  if (mu == 0) return identity<Real>();
  if (mu < 0 || mu > 3) throw std::invalid_argument("basis: index must be in 0..3");
  return Element<Real>(unit_j<Real> * pauli<Real>(mu));
}

/// Clifford conjugation: transpose, then flip both the complex and the
/// hyperbolic unit in every entry. Anti-automorphism; paravectors map as
/// (x0, xvec) -> (x0, -xvec).
template <typename Real>
Element<Real> bar(const Element<Real>& a) {
  return a.transpose().unaryExpr([](const Bicomplex<Real>& b) { return conj_ij(b); });
}

/// Reversion: transpose plus change of sign of the complex unit.
/// Anti-automorphism.
template <typename Real>
Element<Real> reversion(const Element<Real>& a) {
  return a.transpose().unaryExpr([](const Bicomplex<Real>& b) { return conj_i(b); });
}

/// Grade involution: entrywise change of sign of the hyperbolic unit
/// (no transpose). Automorphism.
template <typename Real>
Element<Real> grade_involution(const Element<Real>& a) {
  return a.unaryExpr([](const Bicomplex<Real>& b) { return conj_j(b); });
}

/// Trace scalar product x.y = Tr(bar(x) y) / 2. Reproduces the Minkowski
/// metric on the basis paravectors.
template <typename Real>
Bicomplex<Real> scalar_product(const Element<Real>& x, const Element<Real>& y) {
  return Element<Real>(bar(x) * y).trace() * Real(0.5);
}

/// Tr(x y) / 2 without the conjugation. For products of wedge-type elements
/// (biparavectors satisfy bar(w) = -w) the conjugation is already absorbed,
/// and this is the squared-length convention used throughout.
template <typename Real>
Bicomplex<Real> half_trace_product(const Element<Real>& x, const Element<Real>& y) {
  return Element<Real>(x * y).trace() * Real(0.5);
}

template <typename Real>
Real abs_max(const Element<Real>& a) {
  Real m(0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m = std::max(m, abs_max(a(r, c)));
  return m;
}

template <typename Real>
Real max_abs_diff(const Element<Real>& a, const Element<Real>& b) {
  return abs_max(Element<Real>(a - b));
}

template <typename Real>
bool approx_eq(const Element<Real>& a, const Element<Real>& b, Real tol) {
  const Real scale = Real(1) + std::max(abs_max(a), abs_max(b));
  return max_abs_diff(a, b) <= tol * scale;
}

/// If a = c * identity, returns c. Throws when the off-scalar residue is not
/// negligible against the element's own scale.
template <typename Real>
Bicomplex<Real> scalar_part_strict(const Element<Real>& a, Real tol = Real(1e-12)) {
  const Bicomplex<Real> c = a(0, 0);
  Element<Real> residue = a;
  residue(0, 0) -= c;
  residue(1, 1) -= c;
  if (abs_max(residue) > tol * (Real(1) + abs_max(a)))
    throw std::logic_error("scalar_part_strict: element is not a scalar multiple of identity");
  return c;
}

/// Unit pseudoscalar of the algebra, computed as e1 * bar(e2) * e3. The
/// product is checked to be scalar; its value is -ij and it squares to -1.
template <typename Real = double>
Bicomplex<Real> pseudoscalar() {
  const Element<Real> p = basis<Real>(1) * bar(basis<Real>(2)) * basis<Real>(3);
  return scalar_part_strict(p);
}

}  // namespace hyperwave
