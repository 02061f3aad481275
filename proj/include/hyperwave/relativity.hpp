#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <stdexcept>

#include "hyperwave/algebra.hpp"
#include "hyperwave/bicomplex.hpp"

namespace hyperwave {

/// Real Minkowski four-vector, metric diag(+,-,-,-).
template <typename Real = double>
using FourVector = Eigen::Matrix<Real, 4, 1>;

using FourVectord = FourVector<double>;

template <typename Real = double>
constexpr Real metric_sign(int mu) {
  return mu == 0 ? Real(1) : Real(-1);
}

template <typename Real>
Real minkowski_dot(const FourVector<Real>& u, const FourVector<Real>& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

template <typename Real>
Real minkowski_square(const FourVector<Real>& v) {
  return minkowski_dot(v, v);
}

/// Index lowering: v_mu = g_{mu nu} v^nu.
template <typename Real>
FourVector<Real> lower(const FourVector<Real>& v) {
  return {v[0], -v[1], -v[2], -v[3]};
}

/// Pure boost with velocity beta (|beta| < 1); preserves Minkowski squares.
template <typename Real>
FourVector<Real> boost(const FourVector<Real>& v, const Eigen::Matrix<Real, 3, 1>& beta) {
  const Real b2 = beta.squaredNorm();
  if (b2 >= Real(1)) throw std::invalid_argument("boost: |beta| must be < 1");
  if (b2 == Real(0)) return v;
  const Real gamma = Real(1) / std::sqrt(Real(1) - b2);
  const Eigen::Matrix<Real, 3, 1> x = v.template tail<3>();
  const Real bx = beta.dot(x);
  FourVector<Real> out;
  out[0] = gamma * (v[0] - bx);
  const Eigen::Matrix<Real, 3, 1> spatial =
      x + ((gamma - Real(1)) * bx / b2 - gamma * v[0]) * beta;
  out.template tail<3>() = spatial;
  return out;
}

/// Paravector embedding x = sum_mu x^mu e_mu.
template <typename Real>
Element<Real> paravector(const FourVector<Real>& v) {
  Element<Real> a = v[0] * identity<Real>();
  for (int k = 1; k <= 3; ++k) a += v[k] * basis<Real>(k);
  return a;
}

/// Left inverse of paravector(). Throws when the element carries components
/// outside the real paravector span.
template <typename Real>
FourVector<Real> coords(const Element<Real>& a, Real tol = Real(1e-10)) {
  FourVector<Real> v;
  v[0] = (a(0, 0).re + a(1, 1).re) * Real(0.5);
  v[1] = (a(0, 1).im_j + a(1, 0).im_j) * Real(0.5);
  v[2] = (a(1, 0).im_ij - a(0, 1).im_ij) * Real(0.5);
  v[3] = (a(0, 0).im_j - a(1, 1).im_j) * Real(0.5);
  if (max_abs_diff(paravector(v), a) > tol * (Real(1) + abs_max(a)))
    throw std::invalid_argument("coords: element is not a real paravector");
  return v;
}

/// Symmetric part of x bar(y): for paravectors a scalar multiple of identity
/// equal to the Minkowski scalar product.
template <typename Real>
Element<Real> dot(const Element<Real>& x, const Element<Real>& y) {
  return Element<Real>((x * bar(y) + y * bar(x)) * Real(0.5));
}

/// Antisymmetric part of x bar(y): the biparavector (plane) spanned by x, y.
template <typename Real>
Element<Real> wedge(const Element<Real>& x, const Element<Real>& y) {
  return Element<Real>((x * bar(y) - y * bar(x)) * Real(0.5));
}

/// (x bar(y) - bar(x) y) / 2; the component whose sign flips when the bar
/// moves to the other factor.
template <typename Real>
Element<Real> wr(const Element<Real>& x, const Element<Real>& y) {
  return Element<Real>((x * bar(y) - bar(x) * y) * Real(0.5));
}

enum class SpinConvention { Old, New };

constexpr int epsilon3(int k, int l, int m) {
  return (k - l) * (l - m) * (m - k) / 2;  // valid for k,l,m in 1..3
}

/// Antisymmetric 4x4 array of algebra elements generating Lorentz
/// transformations. Old convention uses Pauli-matrix entries; New uses the
/// hyperbolic basis e_k = j sigma_k, so New = j * Old entrywise.
template <typename Real = double>
struct SpinTensor {
  std::array<std::array<Element<Real>, 4>, 4> sigma;
  SpinConvention convention;

  const Element<Real>& operator()(int mu, int nu) const { return sigma[mu][nu]; }
};

template <typename Real = double>
SpinTensor<Real> spin_tensor(SpinConvention convention) {
  SpinTensor<Real> st;
  st.convention = convention;
  const Bicomplex<Real> pseudo(Real(0), Real(0), Real(0), Real(-1));  // -ij
  for (auto& row : st.sigma)
    for (auto& entry : row) entry = zero_element<Real>();
  for (int k = 1; k <= 3; ++k) {
    const Element<Real> spatial =
        convention == SpinConvention::Old ? pauli<Real>(k) : basis<Real>(k);
    // time-space block: Old sigma_0k = -ij sigma_k, New sigma_0k = pseudo * e_k
    const Element<Real> ts = convention == SpinConvention::Old
                                 ? Element<Real>(-unit_ij<Real> * spatial)
                                 : Element<Real>(pseudo * spatial);
    st.sigma[0][k] = ts;
    st.sigma[k][0] = -ts;
    for (int l = 1; l <= 3; ++l) {
      if (k == l) continue;
      for (int m = 1; m <= 3; ++m) {
        const int eps = epsilon3(k, l, m);
        if (eps != 0)
          st.sigma[k][l] = Element<Real>(Real(eps) *
                                         (convention == SpinConvention::Old ? pauli<Real>(m)
                                                                            : basis<Real>(m)));
      }
    }
  }
  return st;
}

/// Generators of the spin angular momentum, s_mu_nu = sigma_mu_nu / 2 in the
/// New convention.
template <typename Real = double>
std::array<std::array<Element<Real>, 4>, 4> spin_generators() {
  const SpinTensor<Real> st = spin_tensor<Real>(SpinConvention::New);
  std::array<std::array<Element<Real>, 4>, 4> s;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) s[mu][nu] = Element<Real>(st(mu, nu) * Real(0.5));
  return s;
}

/// Dense rank-4 tensor over indices 0..3.
template <typename T>
struct Tensor4 {
  std::array<T, 256> v{};

  T& operator()(int a, int b, int c, int d) { return v[((a * 4 + b) * 4 + c) * 4 + d]; }
  const T& operator()(int a, int b, int c, int d) const {
    return v[((a * 4 + b) * 4 + c) * 4 + d];
  }
};

/// t(rho,mu,nu,sigma) = Tr(sigma_rho_mu sigma_nu_sigma) / 2. Every entry lies
/// in {0, +-1, +-ij}; identical for both spin-tensor conventions.
template <typename Real = double>
using TraceTable = Tensor4<Bicomplex<Real>>;

namespace detail {

template <typename Real>
TraceTable<Real> compute_trace_table(SpinConvention convention) {
  const SpinTensor<Real> st = spin_tensor<Real>(convention);
  TraceTable<Real> table;
  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int s = 0; s < 4; ++s)
          table(r, m, n, s) = half_trace_product(st(r, m), st(n, s));
  return table;
}

}  // namespace detail

/// Computed once per convention and cached.
template <typename Real = double>
const TraceTable<Real>& trace_table(SpinConvention convention = SpinConvention::New) {
  static const TraceTable<Real> old_table =
      detail::compute_trace_table<Real>(SpinConvention::Old);
  static const TraceTable<Real> new_table =
      detail::compute_trace_table<Real>(SpinConvention::New);
  return convention == SpinConvention::Old ? old_table : new_table;
}

/// Real part of the trace table; closed form g_rho_nu g_mu_sigma -
/// g_rho_sigma g_mu_nu.
template <typename Real = double>
Tensor4<Real> eta_tensor() {
  const TraceTable<Real>& t = trace_table<Real>();
  Tensor4<Real> eta;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) eta(a, b, c, d) = t(a, b, c, d).re;
  return eta;
}

/// Totally antisymmetric Levi-Civita symbol. The overall sign is extracted
/// from the ij part of the trace table (epsilon(mu,nu,rho,sigma) sits at
/// table slot (rho,mu,nu,sigma)), and the decomposition
/// t = eta + ij * epsilon is checked to reconstruct all 256 entries exactly.
template <typename Real = double>
Tensor4<Real> epsilon4() {
  const TraceTable<Real>& t = trace_table<Real>();
  const Tensor4<Real> eta = eta_tensor<Real>();
  Tensor4<Real> eps;
  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int s = 0; s < 4; ++s) eps(m, n, r, s) = t(r, m, n, s).im_ij;

  int nonzero = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const Real e = eps(a, b, c, d);
          if (e != Real(0) && e != Real(1) && e != Real(-1))
            throw std::logic_error("epsilon4: entry outside {0, +1, -1}");
          if (e != Real(0)) ++nonzero;
          // antisymmetry under every adjacent transposition
          if (eps(b, a, c, d) != -e || eps(a, c, b, d) != -e || eps(a, b, d, c) != -e)
            throw std::logic_error("epsilon4: not totally antisymmetric");
          // exact reconstruction of the trace table
          const Bicomplex<Real> expect(eta(c, a, b, d), Real(0), Real(0), eps(a, b, c, d));
          if (t(c, a, b, d) != expect)
            throw std::logic_error("epsilon4: eta + ij*epsilon does not reconstruct the table");
        }
  if (nonzero != 24) throw std::logic_error("epsilon4: expected 24 nonzero entries");
  return eps;
}

/// Pauli-Lubanski vector w_mu = pseudoscalar * sigma_mu_nu p^nu; agrees with
/// the biparavector e_mu wedge p. Satisfies bar(w_mu) = -w_mu and p^mu w_mu = 0.
template <typename Real>
std::array<Element<Real>, 4> pauli_lubanski(const FourVector<Real>& p) {
  static const SpinTensor<Real> st = spin_tensor<Real>(SpinConvention::New);
  const Bicomplex<Real> pseudo = pseudoscalar<Real>();
  std::array<Element<Real>, 4> w;
  for (int mu = 0; mu < 4; ++mu) {
    Element<Real> acc = zero_element<Real>();
    for (int nu = 0; nu < 4; ++nu) acc += p[nu] * Element<Real>(pseudo * st(mu, nu));
    w[mu] = acc;
  }
  return w;
}

}  // namespace hyperwave
