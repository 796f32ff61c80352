#include "relhur/dirac_states.hpp"

#include <numbers>

namespace relhur::dirac {

namespace {

using C = std::complex<double>;
constexpr C kI(0.0, 1.0);

template <typename F>
C richardson_derivative(const F& g, double x, double h) {
  const C coarse = (g(x + h) - g(x - h)) / (2.0 * h);
  const double hh = 0.5 * h;
  const C fine = (g(x + hh) - g(x - hh)) / (2.0 * hh);
  return (4.0 * fine - coarse) / 3.0;
}

// 1 - m/E without cancellation.
double one_minus_m_over_e(double p, double mass) {
  const double energy = std::sqrt(mass * mass + p * p);
  return p * p / (energy * (energy + mass));
}

struct Frame {
  Eigen::Vector3d r_hat, theta_hat, phi_hat;
};

Frame spherical_frame(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta), sp = std::sin(phi), cp = std::cos(phi);
  return {{st * cp, st * sp, ct}, {ct * cp, ct * sp, -st}, {-sp, cp, 0.0}};
}

Eigen::Vector3cd cartesian_gradient(const AmplitudeJet& j, double p, double theta, const Frame& fr) {
  const double st = std::sin(theta);
  return j.d_p * fr.r_hat.cast<C>() + (j.d_theta / p) * fr.theta_hat.cast<C>() +
         (j.d_phi / (p * st)) * fr.phi_hat.cast<C>();
}

AmplitudeJet zero_jet() { return {C(0.0), C(0.0), C(0.0), C(0.0)}; }

// Integrand layout, all per dp dtheta dphi:
//   0      |f|^2 p^2 sin
//   1..3   p_vec |f|^2 p^2 sin
//   4      p^2 |f|^2 p^2 sin
//   5      spherical-coordinate <r^2> density (amplitude form)
//   6..8   Re(Phi^dag i grad Phi) p^2 sin
//   9      |grad Phi|^2 p^2 sin
constexpr int kDim = 10;

Eigen::VectorXd point_integrand(const AmplitudePair& amp, double mass, double p, double theta, int n_phi) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(kDim);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double om = one_minus_m_over_e(p, mass);
  const double energy = std::sqrt(mass * mass + p * p);
  const double e2 = energy * energy;
  const double w_pot = om + mass * mass * p * p / (4.0 * e2 * e2);
  const double dphi = 2.0 * std::numbers::pi / n_phi;

  for (int k = 0; k < n_phi; ++k) {
    const double phi = k * dphi;
    const AmplitudeJet jp = evaluate_jet(amp.f_plus, amp.partials_plus, p, theta, phi);
    const AmplitudeJet jm = amp.f_minus ? evaluate_jet(amp.f_minus, amp.partials_minus, p, theta, phi) : zero_jet();

    const double dens = std::norm(jp.f) + std::norm(jm.f);
    const Frame fr = spherical_frame(theta, phi);
    const Eigen::Vector3d pvec = p * fr.r_hat;
    const double jac = p * p * st;

    acc[0] += dens * jac;
    acc.segment<3>(1) += pvec * dens * jac;
    acc[4] += p * p * dens * jac;

    // <r^2> in amplitude form, measure dp dtheta sin dphi
    double r2 = 0.0;
    const AmplitudeJet* jets[2] = {&jp, &jm};
    const int spins[2] = {1, -1};
    for (int i = 0; i < 2; ++i) {
      const AmplitudeJet& j = *jets[i];
      r2 += p * p * std::norm(j.d_p) + std::norm(j.d_theta) + std::norm(j.d_phi) / (st * st) + w_pot * std::norm(j.f) +
            spins[i] * om * std::imag(std::conj(j.f) * j.d_phi);
    }
    // (-p_z, i p_z, p_x - i p_y) . grad = e^{-i phi} (-d_theta + i cot d_phi)
    const C mix = (-(std::conj(jp.f) * jm.d_theta - jm.f * std::conj(jp.d_theta)) +
                   kI * (ct / st) * (std::conj(jp.f) * jm.d_phi - jm.f * std::conj(jp.d_phi))) *
                  std::exp(-kI * phi);
    r2 += om * std::real(mix);
    acc[5] += r2 * st;

    // Direct route through Phi = sum_s u_s f_s
    const Bispinor up = bispinor_u<double>(pvec, Spin::Up, mass);
    const Bispinor um = bispinor_u<double>(pvec, Spin::Down, mass);
    const BispinorGradient gup = bispinor_u_gradient(pvec, Spin::Up, mass);
    const BispinorGradient gum = bispinor_u_gradient(pvec, Spin::Down, mass);
    const Eigen::Vector3cd grad_fp = cartesian_gradient(jp, p, theta, fr);
    const Eigen::Vector3cd grad_fm = cartesian_gradient(jm, p, theta, fr);
    const Bispinor phi_vec = up * jp.f + um * jm.f;
    const BispinorGradient grad_phi = gup * jp.f + gum * jm.f + up * grad_fp.transpose() + um * grad_fm.transpose();
    const Eigen::Vector3cd first = kI * (phi_vec.adjoint() * grad_phi).transpose();
    acc.segment<3>(6) += first.real() * jac;
    acc[9] += grad_phi.squaredNorm() * jac;
  }
  return acc * dphi;
}

quadrature::QuadResultN integrate_state(const AmplitudePair& amp, const quadrature::QuadConfig& cfg, double mass) {
  if (!amp.f_plus) throw DomainError("dispersion_functional: f_plus must be set");
  if (!(mass >= 0.0)) throw DomainError("dispersion_functional: mass must be >= 0");
  // Low-degree trigonometric polynomials in phi are integrated exactly by
  // the trapezoid rule once the point count exceeds the degree.
  const int n_phi = amp.phi_independent ? 8 : 64;
  const quadrature::Integrand2dN f = [&](double p, double theta) {
    return point_integrand(amp, mass, p, theta, n_phi);
  };
  quadrature::QuadResultN r = quadrature::integrate_2d(f, kDim, cfg);
  if (!(r.value[0] > 0.0) || !std::isfinite(r.value[0])) {
    throw DomainError("dispersion_functional: amplitude is not normalizable");
  }
  return r;
}

}  // namespace

Bispinor bispinor_u(const MomentumPoint& pt, Spin s, double mass) {
  return bispinor_u<double>(pt.cartesian(), s, mass);
}

BispinorGradient bispinor_u_gradient(const Eigen::Vector3d& p, Spin s, double mass) {
  const double energy = std::sqrt(mass * mass + p.squaredNorm());
  const double denom = 4.0 * energy * (energy + mass);
  const double scale = 1.0 / std::sqrt(denom);
  // d scale / d p_i = -2 (2E + m) p_i / (E denom^{3/2})
  const double dscale = -2.0 * (2.0 * energy + mass) / (energy * denom * std::sqrt(denom));
  const double me = mass + energy;
  const C perp_plus(p.x(), p.y());
  const C perp_minus(p.x(), -p.y());

  Bispinor v;
  BispinorGradient dv;
  const double ex = p.x() / energy, ey = p.y() / energy, ez = p.z() / energy;
  if (s == Spin::Up) {
    v << C(me + p.z()), perp_plus, C(me - p.z()), -perp_plus;
    dv.col(0) << C(ex), C(1.0), C(ex), C(-1.0);
    dv.col(1) << C(ey), kI, C(ey), -kI;
    dv.col(2) << C(ez + 1.0), C(0.0), C(ez - 1.0), C(0.0);
  } else {
    v << perp_minus, C(me - p.z()), -perp_minus, C(me + p.z());
    dv.col(0) << C(1.0), C(ex), C(-1.0), C(ex);
    dv.col(1) << -kI, C(ey), kI, C(ey);
    dv.col(2) << C(0.0), C(ez - 1.0), C(0.0), C(ez + 1.0);
  }
  BispinorGradient g = scale * dv;
  for (int i = 0; i < 3; ++i) g.col(i) += dscale * p[i] * v;
  return g;
}

AmplitudeJet evaluate_jet(const Amplitude& f, const std::optional<AmplitudePartials>& partials, double p,
                          double theta, double phi) {
  AmplitudeJet j;
  j.f = f(p, theta, phi);
  if (partials) {
    j.d_p = partials->d_p(p, theta, phi);
    j.d_theta = partials->d_theta(p, theta, phi);
    j.d_phi = partials->d_phi(p, theta, phi);
    return j;
  }
  double hp = std::max(1e-5, 1e-5 * p);
  if (p > 0.0) hp = std::min(hp, 0.5 * p);
  constexpr double kAngleStep = 1e-5;
  j.d_p = richardson_derivative([&](double x) { return f(x, theta, phi); }, p, hp);
  j.d_theta = richardson_derivative([&](double x) { return f(p, x, phi); }, theta, kAngleStep);
  j.d_phi = richardson_derivative([&](double x) { return f(p, theta, x); }, phi, kAngleStep);
  return j;
}

DispersionReport make_report(double norm_sq, const Eigen::Vector3d& p_first, double p_second,
                             const Eigen::Vector3d& r_first, double r_second) {
  DispersionReport rep;
  rep.norm_sq = norm_sq;
  rep.mean_p = p_first / norm_sq;
  rep.mean_r = r_first / norm_sq;
  rep.delta_p_sq = p_second / norm_sq - rep.mean_p.squaredNorm();
  rep.delta_r_sq = r_second / norm_sq - rep.mean_r.squaredNorm();
  rep.gamma = std::sqrt(rep.delta_r_sq * rep.delta_p_sq);
  return rep;
}

DispersionReport dispersion_functional(const AmplitudePair& amp, const quadrature::QuadConfig& cfg, double mass) {
  const quadrature::QuadResultN r = integrate_state(amp, cfg, mass);
  const Eigen::VectorXd& v = r.value;
  return make_report(v[0], v.segment<3>(1), v[4], v.segment<3>(6), v[5]);
}

PositionMoments position_moments_direct(const AmplitudePair& amp, const quadrature::QuadConfig& cfg, double mass) {
  const quadrature::QuadResultN r = integrate_state(amp, cfg, mass);
  const Eigen::VectorXd& v = r.value;
  return {v[0], v.segment<3>(6) / v[0], v[9] / v[0]};
}

}  // namespace relhur::dirac
