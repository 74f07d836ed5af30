#include "maglap/approximation.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "maglap/quadrature.hpp"

namespace maglap {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Tensor Gauss-Legendre mean of f over cell (k,s).
template <typename Fn>
auto cell_average(const Fn& f, const GridSpec& g, int k, int s,
                  const QuadratureRule& rule) {
  using value_type = decltype(f(0.0, 0.0));
  const double xc = 0.5 * (g.x_line(k - 1) + g.x_line(k));
  const double yc = 0.5 * (g.y_line(s - 1) + g.y_line(s));
  const double half = 0.5 * g.h();
  value_type acc{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * rule.weights[j] *
             f(xc + half * rule.nodes[i], yc + half * rule.nodes[j]);
    }
  }
  return acc * 0.25;  // weights sum to 2 per axis
}

void require_finite(const cplx& z, int k, int s) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("non-finite sample in cell (" +
                                std::to_string(k) + "," + std::to_string(s) +
                                ")");
  }
}

}  // namespace

Cochain0 discretize_scalar(const std::function<cplx(double, double)>& f,
                           const GridSpec& g, int quad_order) {
  if (!f) throw std::invalid_argument("discretize_scalar: empty function");
  const QuadratureRule rule = gauss_legendre(quad_order);
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const cplx z = cell_average(f, g, k, s, rule);
      require_finite(z, k, s);
      r.ref(k, s) = z;
    }
  }
  return r;
}

MagneticPotential discretize_oneform(
    const std::function<double(double, double)>& ax,
    const std::function<double(double, double)>& ay, const GridSpec& g,
    int quad_order) {
  if (!ax || !ay) throw std::invalid_argument("discretize_oneform: empty function");
  const QuadratureRule rule = gauss_legendre(quad_order);
  MagneticPotential r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const double u = cell_average(ax, g, k, s, rule);
      const double v = cell_average(ay, g, k, s, rule);
      require_finite(cplx{u, v}, k, s);
      r.ref_ax(k, s) = u;
      r.ref_ay(k, s) = v;
    }
  }
  return r;
}

double w_norm(const Cochain0& phi) {
  const GridSpec& g = phi.grid();
  double acc = 0;
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      acc += std::norm(phi.at(k + 1, s) - phi.at(k, s)) +
             std::norm(phi.at(k, s + 1) - phi.at(k, s));
    }
  }
  return std::sqrt(acc);
}

std::pair<StepField, SolveReport> solve_dirichlet_h(const ContinuumProblem& p,
                                                    const GridSpec& g,
                                                    SolveMethod method,
                                                    double tol,
                                                    int quad_order,
                                                    int max_iterations) {
  p.validate();
  const Rect& box = g.box();
  auto close = [&](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };
  if (!close(box.a1, p.domain.a1) || !close(box.b1, p.domain.b1) ||
      !close(box.a2, p.domain.a2) || !close(box.b2, p.domain.b2)) {
    throw std::invalid_argument("grid rectangle does not match the problem domain");
  }

  const Cochain0 fh = discretize_scalar(p.rhs, g, quad_order);
  MagneticPotential ah = MagneticPotential::zero(g);
  if (p.pot_x && p.pot_y) {
    ah = discretize_oneform(p.pot_x, p.pot_y, g, quad_order);
  }

  // The h-scaled lattice equation: potential h*A, right side h^2*f.
  const MagneticPotential a_eff = ah.scaled(g.h());
  Cochain0 rhs(g);
  const double h2 = g.h() * g.h();
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      rhs.ref(k, s) = h2 * fh.at(k, s);
    }
  }

  const AssembledOperator L = assemble(g, a_eff);
  SolveReport report = solve(L, rhs, method, tol, false, max_iterations);
  StepField field = StepField::from_cochain(report.solution);
  return {std::move(field), std::move(report)};
}

double l2_error_vs(const StepField& f,
                   const std::function<cplx(double, double)>& exact,
                   int quad_order) {
  if (!exact) throw std::invalid_argument("l2_error_vs: empty function");
  const GridSpec& g = f.grid();
  const QuadratureRule rule = gauss_legendre(quad_order);
  double acc = 0;
  const double cell_area = g.h() * g.h();
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const cplx value = f.value(k, s);
      auto err2 = [&](double x, double y) {
        return std::norm(value - exact(x, y));
      };
      acc += cell_area * cell_average(err2, g, k, s, rule);
    }
  }
  return std::sqrt(acc);
}

double l2_norm_function(const std::function<double(double, double)>& f,
                        const Rect& rect, int quad_order) {
  if (!f) throw std::invalid_argument("l2_norm_function: empty function");
  // Fixed decomposition (64 cells along x); fine enough for the smooth
  // catalog data and deterministic across levels.
  const int cells_x = 64;
  const double width = rect.a2 - rect.a1;
  const double height = rect.b2 - rect.b1;
  const int cells_y =
      std::max(1, static_cast<int>(std::lround(cells_x * height / width)));
  const GridSpec g(cells_x, cells_y, rect);
  const QuadratureRule rule = gauss_legendre(quad_order);
  double acc = 0;
  const double cell_area = g.h() * g.h();
  auto f2 = [&](double x, double y) {
    const double v = f(x, y);
    return v * v;
  };
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      acc += cell_area * cell_average(f2, g, k, s, rule);
    }
  }
  return std::sqrt(acc);
}

namespace {

ConvergenceRow study_level(const ContinuumProblem& p, int level,
                           SolveMethod method, double tol, int quad_order,
                           int max_iterations, double rhs_norm) {
  const double width = p.domain.a2 - p.domain.a1;
  const double height = p.domain.b2 - p.domain.b1;
  const int m = static_cast<int>(std::lround(level * height / width));
  const GridSpec g(level, std::max(m, 1), p.domain);

  auto [field, report] =
      solve_dirichlet_h(p, g, method, tol, quad_order, max_iterations);
  ConvergenceRow row;
  row.N = g.N();
  row.M = g.M();
  row.h = g.h();
  row.l2_error = p.has_exact() ? l2_error_vs(field, p.exact, quad_order) : kNan;
  row.order = kNan;
  row.w_norm = maglap::w_norm(field.to_cochain());
  row.ratio_bound = row.w_norm / rhs_norm;
  row.iterations = report.iterations;
  row.residual = report.relative_residual;
  return row;
}

}  // namespace

StudyResult convergence_study(const ContinuumProblem& p,
                              const std::vector<int>& levels,
                              SolveMethod method, double tol, bool parallel,
                              int quad_order, int max_iterations) {
  p.validate();
  if (levels.empty()) throw std::invalid_argument("convergence_study: no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1 || (i > 0 && levels[i] <= levels[i - 1])) {
      throw std::invalid_argument(
          "convergence_study: levels must be strictly increasing");
    }
  }

  auto re = [&p](double x, double y) { return p.rhs(x, y).real(); };
  auto im = [&p](double x, double y) { return p.rhs(x, y).imag(); };
  const double rhs_norm = l2_norm_function(re, p.domain, quad_order) +
                          l2_norm_function(im, p.domain, quad_order);

  StudyResult result;
  if (parallel) {
    std::vector<std::future<ConvergenceRow>> futures;
    futures.reserve(levels.size());
    for (int level : levels) {
      futures.push_back(std::async(std::launch::async, [&, level] {
        return study_level(p, level, method, tol, quad_order, max_iterations,
                           rhs_norm);
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      try {
        result.rows.push_back(futures[i].get());
      } catch (const std::exception& e) {
        result.complete = false;
        result.failed_level = levels[i];
        result.error = e.what();
        break;
      }
    }
  } else {
    for (int level : levels) {
      try {
        result.rows.push_back(study_level(p, level, method, tol, quad_order,
                                          max_iterations, rhs_norm));
      } catch (const std::exception& e) {
        result.complete = false;
        result.failed_level = level;
        result.error = e.what();
        break;
      }
    }
  }

  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const double prev = result.rows[i - 1].l2_error;
    const double cur = result.rows[i].l2_error;
    if (std::isfinite(prev) && std::isfinite(cur) && cur > 0) {
      result.rows[i].order = std::log2(prev / cur);
    }
  }
  return result;
}

}  // namespace maglap
