#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hyperwave {

/// Commutative four-unit scalar ring generated by 1, i, j, ij with
/// i^2 = -1, j^2 = +1, ij = ji. The ring has zero divisors
/// ((1+j)(1-j) = 0), so no general inverse is provided; division is
/// defined only by real scalars.
template <typename Real = double>
struct Bicomplex {
  Real re{0};
  Real im_i{0};
  Real im_j{0};
  Real im_ij{0};

  Bicomplex() = default;
  Bicomplex(Real real) : re(real) {}  // NOLINT: implicit by design, acts as ring embedding
  Bicomplex(Real real, Real i_part, Real j_part, Real ij_part)
      : re(real), im_i(i_part), im_j(j_part), im_ij(ij_part) {}

  Bicomplex& operator+=(const Bicomplex& o) {
    re += o.re;
    im_i += o.im_i;
    im_j += o.im_j;
    im_ij += o.im_ij;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    re -= o.re;
    im_i -= o.im_i;
    im_j -= o.im_j;
    im_ij -= o.im_ij;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) {
    *this = *this * o;
    return *this;
  }
  Bicomplex& operator*=(Real s) {
    re *= s;
    im_i *= s;
    im_j *= s;
    im_ij *= s;
    return *this;
  }
  Bicomplex& operator/=(Real s) { return *this *= Real(1) / s; }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator-(const Bicomplex& a) { return {-a.re, -a.im_i, -a.im_j, -a.im_ij}; }

  // Expansion of the product over the unit table:
  //   i*i = -1, j*j = +1, ij*ij = -1, i*j = ij, i*ij = -j, j*ij = i.
  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return {a.re * b.re - a.im_i * b.im_i + a.im_j * b.im_j - a.im_ij * b.im_ij,
            a.re * b.im_i + a.im_i * b.re + a.im_j * b.im_ij + a.im_ij * b.im_j,
            a.re * b.im_j + a.im_j * b.re - a.im_i * b.im_ij - a.im_ij * b.im_i,
            a.re * b.im_ij + a.im_ij * b.re + a.im_i * b.im_j + a.im_j * b.im_i};
  }
  friend Bicomplex operator*(Bicomplex a, Real s) { return a *= s; }
  friend Bicomplex operator*(Real s, Bicomplex a) { return a *= s; }
  friend Bicomplex operator/(Bicomplex a, Real s) { return a /= s; }

  friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.re == b.re && a.im_i == b.im_i && a.im_j == b.im_j && a.im_ij == b.im_ij;
  }
  friend bool operator!=(const Bicomplex& a, const Bicomplex& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Bicomplex& a) {
    return os << '(' << a.re << " + " << a.im_i << "i + " << a.im_j << "j + " << a.im_ij
              << "ij)";
  }
};

using Bicomplexd = Bicomplex<double>;

/// i -> -i (flips the i and ij coefficients).
template <typename Real>
Bicomplex<Real> conj_i(const Bicomplex<Real>& a) {
  return {a.re, -a.im_i, a.im_j, -a.im_ij};
}

/// j -> -j (flips the j and ij coefficients).
template <typename Real>
Bicomplex<Real> conj_j(const Bicomplex<Real>& a) {
  return {a.re, a.im_i, -a.im_j, -a.im_ij};
}

/// Both units flipped; ij is left invariant.
template <typename Real>
Bicomplex<Real> conj_ij(const Bicomplex<Real>& a) {
  return {a.re, -a.im_i, -a.im_j, a.im_ij};
}

/// Largest absolute coefficient.
template <typename Real>
Real abs_max(const Bicomplex<Real>& a) {
  using std::abs;
  return std::max(std::max(abs(a.re), abs(a.im_i)), std::max(abs(a.im_j), abs(a.im_ij)));
}

/// Componentwise comparison: |a - b|_max <= tol * (1 + max(|a|_max, |b|_max)).
template <typename Real>
bool approx_eq(const Bicomplex<Real>& a, const Bicomplex<Real>& b, Real tol) {
  const Real scale = Real(1) + std::max(abs_max(a), abs_max(b));
  return abs_max(a - b) <= tol * scale;
}

// Unit constants.
template <typename Real = double>
inline const Bicomplex<Real> unit_i{Real(0), Real(1), Real(0), Real(0)};
template <typename Real = double>
inline const Bicomplex<Real> unit_j{Real(0), Real(0), Real(1), Real(0)};
template <typename Real = double>
inline const Bicomplex<Real> unit_ij{Real(0), Real(0), Real(0), Real(1)};

}  // namespace hyperwave

namespace Eigen {

template <typename Real>
struct NumTraits<hyperwave::Bicomplex<Real>> : NumTraits<Real> {
  using Self = hyperwave::Bicomplex<Real>;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
};

// Allow mixed Real * Matrix<Bicomplex> expressions.
template <typename Real, typename BinaryOp>
struct ScalarBinaryOpTraits<Real, hyperwave::Bicomplex<Real>, BinaryOp> {
  typedef hyperwave::Bicomplex<Real> ReturnType;
};
template <typename Real, typename BinaryOp>
struct ScalarBinaryOpTraits<hyperwave::Bicomplex<Real>, Real, BinaryOp> {
  typedef hyperwave::Bicomplex<Real> ReturnType;
};

}  // namespace Eigen
