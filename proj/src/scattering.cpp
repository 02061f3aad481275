#include "hyperwave/scattering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hyperwave {

namespace {

double four_abs_max(const FourVectord& v) { return v.cwiseAbs().maxCoeff(); }

void check_on_shell(const FourVectord& p, double mass, double slack, const char* leg) {
  const double scale = 1.0 + p.squaredNorm();
  if (std::abs(minkowski_square(p) - mass * mass) > 1e-10 * scale + slack) {
    std::ostringstream os;
    os << "kinematics: leg " << leg << " is off shell for mass " << mass;
    throw std::invalid_argument(os.str());
  }
}

Matrix4B to_bicomplex(const Eigen::Matrix4d& m) {
  Matrix4B out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = Bicomplexd(m(a, b));
  return out;
}

CurrentTensor finish_current_tensor(Matrix4B n, const FourVectord& d, const FourVectord& q) {
  double scale = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) scale = std::max(scale, abs_max(n(a, b)));
  const double tol = std::max(1e-12, 1e-14 * scale);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Bicomplexd& e = n(a, b);
      if (std::abs(e.im_i) > tol || std::abs(e.im_j) > tol || std::abs(e.im_ij) > tol)
        throw std::logic_error("current tensor: non-real entry");
    }
  return CurrentTensor{std::move(n), d, q};
}

}  // namespace

Eigen::Matrix4d CurrentTensor::real() const {
  Eigen::Matrix4d out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = n(a, b).re;
  return out;
}

Kinematics make_kinematics(const FourVectord& p1i, const FourVectord& p2i,
                           const FourVectord& p1f, const FourVectord& p2f, double m1, double m2,
                           bool approximate_recoil) {
  Kinematics k{p1i, p2i, p1f, p2f, m1, m2, approximate_recoil};
  const FourVectord balance = p1i + p2i - p1f - p2f;
  const double scale =
      std::max({four_abs_max(p1i), four_abs_max(p2i), four_abs_max(p1f), four_abs_max(p2f), 1.0});
  if (four_abs_max(balance) > 1e-10 * scale)
    throw std::invalid_argument("kinematics: four-momentum is not conserved");
  check_on_shell(p1i, m1, 0.0, "1i");
  check_on_shell(p1f, m1, 0.0, "1f");
  check_on_shell(p2i, m2, 0.0, "2i");
  const double slack = approximate_recoil ? std::abs(minkowski_square(k.q())) * (1 + 1e-10) : 0.0;
  check_on_shell(p2f, m2, slack, "2f");
  return k;
}

CurrentTensor current_tensor_trace(const FourVectord& pi, const FourVectord& pf) {
  static const SpinTensor<double> st = spin_tensor<double>(SpinConvention::Old);
  const FourVectord d = pf + pi;
  const FourVectord q = pf - pi;
  const FourVectord d_low = lower(d);

  // i q^rho sigma_rho_mu and i sigma_nu_sigma q^sigma, contracted up front
  std::array<Elementd, 4> left, right;
  for (int mu = 0; mu < 4; ++mu) {
    Elementd l = zero_element<double>();
    Elementd r = zero_element<double>();
    for (int rho = 0; rho < 4; ++rho) {
      l += q[rho] * Elementd(unit_i<double> * st(rho, mu));
      r += q[rho] * Elementd(unit_i<double> * st(mu, rho));
    }
    left[mu] = l;
    right[mu] = r;
  }

  Matrix4B n;
  for (int mu = 0; mu < 4; ++mu) {
    const Elementd a = Elementd(d_low[mu] * identity<double>() + left[mu]);
    for (int nu = 0; nu < 4; ++nu) {
      const Elementd b = Elementd(d_low[nu] * identity<double>() + right[nu]);
      n(mu, nu) = half_trace_product(a, b);
    }
  }
  return finish_current_tensor(std::move(n), d, q);
}

CurrentTensor current_tensor_closed(const FourVectord& pi, const FourVectord& pf) {
  const FourVectord d = pf + pi;
  const FourVectord q = pf - pi;
  const FourVectord d_low = lower(d);
  const Eigen::Matrix4d b = b_tensor(q);
  Eigen::Matrix4d n = d_low * d_low.transpose() - b;
  return finish_current_tensor(to_bicomplex(n), d, q);
}

Eigen::Matrix4d b_tensor(const FourVectord& q) {
  static const Tensor4<double> eta = eta_tensor<double>();
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double acc = 0;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) acc += eta(rho, mu, nu, sig) * q[rho] * q[sig];
      b(mu, nu) = acc;
    }
  return b;
}

Matrix4B b_tensor_geometric(const FourVectord& q) {
  const Elementd qp = paravector(q);
  std::array<Elementd, 4> planes;
  for (int mu = 0; mu < 4; ++mu) planes[mu] = wedge(basis<double>(mu), qp);
  Matrix4B b;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) b(mu, nu) = half_trace_product(planes[mu], planes[nu]);
  return b;
}

AmplitudeBreakdown amplitude_breakdown(const Kinematics& k, double propagator_sq) {
  const FourVectord d1 = k.d1();
  const FourVectord d2 = k.d2();
  const FourVectord q = k.q();

  // raw route: trace-form tensors contracted with the metric
  const Eigen::Matrix4d n1 = current_tensor_trace(k.p1i, k.p1f).real();
  const Eigen::Matrix4d n2 = current_tensor_trace(k.p2i, k.p2f).real();
  double contraction = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      contraction += n1(mu, nu) * n2(mu, nu) * metric_sign(mu) * metric_sign(nu);

  // expanded route: (d1.d2)^2 - (d1d1 + d2d2).b + b.b
  const Eigen::Matrix4d b = b_tensor(q);
  AmplitudeBreakdown out;
  const double d1d2 = minkowski_dot(d1, d2);
  out.d1d2_sq = d1d2 * d1d2;
  out.d1d1_b = d1.dot(b * d1);
  out.d2d2_b = d2.dot(b * d2);
  out.bb = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      out.bb += b(mu, nu) * b(mu, nu) * metric_sign(mu) * metric_sign(nu);
  const double expanded = out.d1d2_sq - (out.d1d1_b + out.d2d2_b) + out.bb;

  const double scale = std::max({std::abs(contraction), std::abs(expanded), 1.0});
  if (std::abs(contraction - expanded) > 1e-10 * scale)
    throw std::logic_error("amplitude: tensor contraction and expanded form disagree");

  out.contraction = contraction;
  out.amplitude_sq = propagator_sq * contraction;
  return out;
}

double amplitude_squared(const Kinematics& k, double propagator_sq) {
  return amplitude_breakdown(k, propagator_sq).amplitude_sq;
}

namespace {

constexpr double kPi = std::numbers::pi;

void check_mott_args(double m, double M, double p, double theta) {
  if (!(m > 0) || !(M > 0) || !(p > 0))
    throw std::invalid_argument("mott: m, M and p must be positive");
  if (!(theta > 0) || !(theta < kPi))
    throw std::invalid_argument("mott: theta must lie in (0, pi)");
}

}  // namespace

Kinematics mott_kinematics(double m, double M, double p, double theta) {
  check_mott_args(m, M, p, theta);
  const double E = std::hypot(m, p);
  const FourVectord p1i{E, 0, 0, p};
  const FourVectord p2i{M, 0, 0, 0};
  const FourVectord p1f{E, 0, p * std::sin(theta), p * std::cos(theta)};
  const FourVectord p2f = p1i + p2i - p1f;
  return make_kinematics(p1i, p2i, p1f, p2f, m, M, /*approximate_recoil=*/true);
}

Kinematics mott_kinematics_exact(double m, double M, double p, double theta) {
  check_mott_args(m, M, p, theta);
  const double E = std::hypot(m, p);
  const double c = std::cos(theta);
  // (E+M) sqrt(m^2 + w^2) = m^2 + E M + p w c, solved for the outgoing
  // momentum w > 0
  const double A = (E + M) * (E + M) - p * p * c * c;
  const double B = (m * m + E * M) * p * c;
  const double C = -p * p * (M * M - m * m);
  const double disc = B * B - A * C;
  if (disc < 0) throw std::invalid_argument("mott: no elastic solution");
  const double w = (B + std::sqrt(disc)) / A;
  const double Ef = std::hypot(m, w);
  const FourVectord p1i{E, 0, 0, p};
  const FourVectord p2i{M, 0, 0, 0};
  const FourVectord p1f{Ef, 0, w * std::sin(theta), w * std::cos(theta)};
  const FourVectord p2f = p1i + p2i - p1f;
  return make_kinematics(p1i, p2i, p1f, p2f, m, M, /*approximate_recoil=*/false);
}

double mott_leading(double m, double M, double p, double theta, double propagator_sq) {
  const double ch = std::cos(theta / 2);
  return 16.0 * propagator_sq * M * M * (m * m + p * p * ch * ch);
}

double dirac_reference(double m, double M, double p, double theta, double propagator_sq) {
  return mott_leading(m, M, p, theta, propagator_sq) / 16.0;
}

double propagator_sq(const FourVectord& q) {
  const double qq = minkowski_square(q);
  if (qq == 0.0) throw std::domain_error("propagator: q.q = 0 (forward singularity)");
  return 1.0 / (qq * qq);
}

}  // namespace hyperwave
