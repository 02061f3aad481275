#pragma once

#include <Eigen/Core>

#include "hyperwave/algebra.hpp"
#include "hyperwave/bicomplex.hpp"
#include "hyperwave/relativity.hpp"

namespace hyperwave {

using Matrix4B = Eigen::Matrix<Bicomplexd, 4, 4>;

/// On-shell momenta of a 2->2 elastic process. d1, d2 are the vertex sums,
/// q the transfer at vertex 1; the vertex-2 transfer is -q, so the b tensor
/// (quadratic in q) is shared.
struct Kinematics {
  FourVectord p1i, p2i, p1f, p2f;
  double m1 = 0;
  double m2 = 0;
  bool approximate_recoil = false;

  FourVectord d1() const { return p1f + p1i; }
  FourVectord d2() const { return p2f + p2i; }
  FourVectord q() const { return p1f - p1i; }
};

/// Validates four-momentum conservation and on-shellness (1e-10 relative).
/// With approximate_recoil the leg-2f mass check is relaxed by |q.q|, the
/// exact off-shellness of the fixed-electron-energy parameterization.
Kinematics make_kinematics(const FourVectord& p1i, const FourVectord& p2i,
                           const FourVectord& p1f, const FourVectord& p2f, double m1, double m2,
                           bool approximate_recoil = false);

/// Spin-summed current tensor values for one vertex, N_mu_nu = d_mu d_nu -
/// b_mu_nu (indices down). Entries are real up to rounding; construction
/// rejects anything else.
struct CurrentTensor {
  Matrix4B n;
  FourVectord d;
  FourVectord q;

  Eigen::Matrix4d real() const;
};

/// Casimir-trick route: N_mu_nu = Tr[(d_mu + i q^rho sigma_rho_mu)
/// (d_nu + i sigma_nu_sigma q^sigma)] / 2 with the Old-convention spin
/// tensor and d_mu lowered.
CurrentTensor current_tensor_trace(const FourVectord& pi, const FourVectord& pf);

/// Closed form d_mu d_nu - eta_rho_mu_nu_sigma q^rho q^sigma.
CurrentTensor current_tensor_closed(const FourVectord& pi, const FourVectord& pf);

/// b_mu_nu = eta_rho_mu_nu_sigma q^rho q^sigma = q_mu q_nu - (q.q) g_mu_nu.
Eigen::Matrix4d b_tensor(const FourVectord& q);

/// Same tensor from the biparavector route: b_mu_nu is the half-trace of
/// (e_mu wedge q)(e_nu wedge q); the conjugation is absorbed by
/// bar(wedge) = -wedge.
Matrix4B b_tensor_geometric(const FourVectord& q);

struct AmplitudeBreakdown {
  double d1d2_sq = 0;   // (d1 . d2)^2
  double d1d1_b = 0;    // eta-contraction of b with d1 d1
  double d2d2_b = 0;    // eta-contraction of b with d2 d2
  double bb = 0;        // b_mu_nu b^mu_nu
  double contraction = 0;  // raw N1_mu_nu N2^mu_nu
  double amplitude_sq = 0;
};

/// Squared one-boson-exchange amplitude |M|^2 = propagator_sq * N1_mu_nu
/// N2^mu_nu. The raw contraction (trace-route tensors) and the expanded
/// scalar form are both evaluated and must agree to 1e-10 relative.
AmplitudeBreakdown amplitude_breakdown(const Kinematics& k, double propagator_sq);
double amplitude_squared(const Kinematics& k, double propagator_sq);

/// Heavy target at rest, incoming projectile along z, outgoing energy kept
/// equal to the incoming one; leg 2f is on-shell only up to |q.q|, flagged
/// via approximate_recoil.
Kinematics mott_kinematics(double m, double M, double p, double theta);

/// Same setup with the outgoing projectile momentum solved from exact
/// elastic two-body kinematics; all four legs on-shell.
Kinematics mott_kinematics_exact(double m, double M, double p, double theta);

/// Leading heavy-target closed form 16 propagator_sq M^2 (m^2 + p^2
/// cos^2(theta/2)). The half angle follows from the exact term arithmetic
/// m^2 + p^2 - p^2 sin^2(theta/2).
double mott_leading(double m, double M, double p, double theta, double propagator_sq);

/// Reference value from the first-order spinor calculation,
/// propagator_sq M^2 (m^2 + p^2 cos^2(theta/2)); smaller than mott_leading
/// by exactly 16.
double dirac_reference(double m, double M, double p, double theta, double propagator_sq);

/// |D(q)|^2 = 1/(q.q)^2 with unit coupling. Throws on the q.q = 0 forward
/// singularity.
double propagator_sq(const FourVectord& q);

}  // namespace hyperwave
