#include "relhur/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace relhur::quadrature {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (positive half, descending) and weights; the
// Gauss 7-point rule lives on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Eigen::VectorXd value;
  Eigen::VectorXd error;
  bool splittable = true;
};

// One G7-K15 application with the QUADPACK error heuristic, per component.
Panel gk15(const IntegrandN& f, int dim, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Eigen::VectorXd resk = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd resg = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd resabs = Eigen::VectorXd::Zero(dim);
  std::array<Eigen::VectorXd, 15> fv;

  fv[7] = f(center);
  resk += kWgk[7] * fv[7];
  resg += kWg[3] * fv[7];
  resabs += kWgk[7] * fv[7].cwiseAbs();
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
    const Eigen::VectorXd pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (fv[j].cwiseAbs() + fv[14 - j].cwiseAbs());
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const Eigen::VectorXd mean = 0.5 * resk;
  Eigen::VectorXd resasc = kWgk[7] * (fv[7] - mean).cwiseAbs();
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * ((fv[j] - mean).cwiseAbs() + (fv[14 - j] - mean).cwiseAbs());
  }

  Panel out{a, b, resk * half, Eigen::VectorXd::Zero(dim)};
  const double ah = std::abs(half);
  for (int k = 0; k < dim; ++k) {
    double err = std::abs((resk[k] - resg[k]) * half);
    const double asc = resasc[k] * ah;
    const double abs_ = resabs[k] * ah;
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_ > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * abs_, err);
    if (!std::isfinite(out.value[k])) err = std::numeric_limits<double>::infinity();
    out.error[k] = err;
  }
  return out;
}

struct Totals {
  Eigen::VectorXd value;
  Eigen::VectorXd error;
};

Totals sum_panels(std::vector<Panel>& panels, int dim) {
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  Totals t{Eigen::VectorXd::Zero(dim), Eigen::VectorXd::Zero(dim)};
  for (const auto& p : panels) {
    t.value += p.value;
    t.error += p.error;
  }
  return t;
}

// Global adaptive bisection. Only the first `controlled` components take
// part in the stopping test; the rest ride along on the same panels.
QuadResultN adaptive(const IntegrandN& f, int dim, int controlled, double a, double b, const QuadConfig& cfg,
                     int initial_panels) {
  cfg.validate();
  long evaluations = 0;
  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 1);
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == initial_panels) ? b : lo + width;
    panels.push_back(gk15(f, dim, lo, hi));
    evaluations += 15;
  }

  Eigen::VectorXd total = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd total_err = Eigen::VectorXd::Zero(dim);
  for (const auto& p : panels) {
    total += p.value;
    total_err += p.error;
  }

  auto converged = [&](const Eigen::VectorXd& val, const Eigen::VectorXd& err) {
    for (int k = 0; k < controlled; ++k) {
      if (!(err[k] <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(val[k])))) return false;
    }
    return true;
  };

  while (!converged(total, total_err)) {
    if (static_cast<int>(panels.size()) >= cfg.max_subdivisions) break;
    // Worst panel by error measured against each component's tolerance.
    std::size_t worst = panels.size();
    double worst_score = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!panels[i].splittable) continue;
      double score = 0.0;
      for (int k = 0; k < controlled; ++k) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total[k]));
        score = std::max(score, panels[i].error[k] / tol);
      }
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    if (worst == panels.size()) break;

    Panel old = panels[worst];
    const double mid = 0.5 * (old.a + old.b);
    if (!(mid > old.a && mid < old.b) || std::abs(old.b - old.a) <= 64.0 * kEps * std::max(std::abs(mid), 1e-300)) {
      panels[worst].splittable = false;
      continue;
    }
    Panel left = gk15(f, dim, old.a, mid);
    Panel right = gk15(f, dim, mid, old.b);
    evaluations += 30;
    total += left.value + right.value - old.value;
    total_err += left.error + right.error - old.error;
    panels[worst] = std::move(left);
    panels.push_back(std::move(right));
  }

  // Recompute in a fixed order so the result does not depend on the
  // refinement history's rounding.
  Totals t = sum_panels(panels, dim);
  QuadResultN out{t.value, t.error, evaluations};
  if (!converged(t.value, t.error)) {
    throw NonConvergence("quadrature: tolerance not reached within " + std::to_string(cfg.max_subdivisions) +
                             " subdivisions",
                         t.value[0], t.error[0]);
  }
  return out;
}

IntegrandN lift(const Integrand& f) {
  return [&f](double x) {
    Eigen::VectorXd v(1);
    v[0] = f(x);
    return v;
  };
}

QuadResult first(const QuadResultN& r) { return {r.value[0], r.est_abs_error[0], r.evaluations}; }

IntegrandN semi_infinite_map(const IntegrandN& f, int dim, double scale) {
  return [&f, dim, scale](double t) -> Eigen::VectorXd {
    const double one_minus = 1.0 - t;
    const double x = scale * t / one_minus;
    const double jac = scale / (one_minus * one_minus);
    if (!std::isfinite(x) || !std::isfinite(jac)) return Eigen::VectorXd::Zero(dim);
    return Eigen::VectorXd(f(x) * jac);
  };
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 || !(decay_scale > 0.0)) {
    throw DomainError("QuadConfig: tolerances and decay_scale must be positive, max_subdivisions >= 1");
  }
}

QuadConfig QuadConfig::tightened(double factor) const {
  QuadConfig c = *this;
  c.abs_tol *= factor;
  c.rel_tol *= factor;
  return c;
}

QuadResultN integrate_finite(const IntegrandN& f, int dim, double a, double b, const QuadConfig& cfg) {
  return adaptive(f, dim, dim, a, b, cfg, 1);
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  return first(integrate_finite(lift(f), 1, a, b, cfg));
}

QuadResultN integrate_semi_infinite(const IntegrandN& f, int dim, const QuadConfig& cfg) {
  cfg.validate();
  const IntegrandN mapped = semi_infinite_map(f, dim, cfg.decay_scale);
  return adaptive(mapped, dim, dim, 0.0, 1.0, cfg, 4);
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  return first(integrate_semi_infinite(lift(f), 1, cfg));
}

QuadResultN integrate_2d(const Integrand2dN& f, int dim, const QuadConfig& cfg) {
  cfg.validate();
  // The inner theta integrals are converged an order tighter so that their
  // errors stay below the outer tolerance after integration over p.
  QuadConfig inner = cfg.tightened(0.1);
  long inner_evals = 0;
  const IntegrandN outer = [&](double p) -> Eigen::VectorXd {
    const IntegrandN slice = [&](double theta) { return f(p, theta); };
    const QuadResultN r = integrate_finite(slice, dim, 0.0, std::numbers::pi, inner);
    inner_evals += r.evaluations;
    Eigen::VectorXd v(2 * dim);
    v << r.value, r.est_abs_error;
    return v;
  };
  const IntegrandN mapped = semi_infinite_map(outer, 2 * dim, cfg.decay_scale);
  const QuadResultN r = adaptive(mapped, 2 * dim, dim, 0.0, 1.0, cfg, 4);
  QuadResultN out;
  out.value = r.value.head(dim);
  out.est_abs_error = r.est_abs_error.head(dim) + r.value.tail(dim).cwiseAbs();
  out.evaluations = inner_evals;
  return out;
}

QuadResult integrate_2d(const Integrand2d& f, const QuadConfig& cfg) {
  const Integrand2dN g = [&f](double p, double theta) {
    Eigen::VectorXd v(1);
    v[0] = f(p, theta);
    return v;
  };
  return first(integrate_2d(g, 1, cfg));
}

}  // namespace relhur::quadrature
