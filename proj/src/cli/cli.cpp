#include "zssusy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "zssusy/akulin.hpp"
#include "zssusy/darboux.hpp"
#include "zssusy/errors.hpp"
#include "zssusy/scattering.hpp"
#include "zssusy/solitons.hpp"
#include "zssusy/twolevel.hpp"

namespace zssusy::cli {

namespace {

struct Common {
  std::string out;
  std::string format = "csv";
  std::string config;
  double tol = 0.0;
};

struct Outcome {
  Table table;
  std::string metric;
  double value = 0.0;
  bool pass = true;
  /// Verify-style commands exit 2 on failure; sweeps always exit 0.
  bool verify = false;
};

using Handler = std::function<Outcome()>;

struct Command {
  CLI::App* app = nullptr;
  Common common;
  Handler handler;
};

void add_common(Command& c, double default_tol) {
  c.common.tol = default_tol;
  c.app->add_option("--tol", c.common.tol, "Pass/fail tolerance");
  c.app->add_option("--out", c.common.out,
                    "Output file (default $ZSSUSY_OUT_DIR/<command>.<format>)");
  c.app->add_option("--format", c.common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  c.app->add_option("--config", c.common.config,
                    "File of key = value lines; flags override it");
}

SolverOptions solver(double L, double rtol, double atol) {
  SolverOptions o;
  o.L = L;
  o.rtol = rtol;
  o.atol = atol;
  return o;
}

std::vector<SymmetryTransform> transforms_for(const std::string& name) {
  if (name == "all") {
    const auto& all = SymmetryTransform::all();
    return {all.begin(), all.end()};
  }
  const std::map<std::string, TransformKind> kinds{{"I", TransformKind::I},
                                                   {"X", TransformKind::X},
                                                   {"Y", TransformKind::Y},
                                                   {"Z", TransformKind::Z}};
  return {SymmetryTransform::of(kinds.at(name))};
}

void check_n_range(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("--n-min exceeds --n-max");
  if (lo < -8 || hi > 8) {
    throw std::invalid_argument("n must lie in [-8, 8]");
  }
}

// -- reflect ----------------------------------------------------------------

void add_reflect(CLI::App& app, Command& c) {
  struct P {
    double n = 1, xi = 1, eta = 0, x0 = 0, phi = 0;
    double zeta_min = 0.1, zeta_max = 5;
    std::size_t points = 40;
    std::string spacing = "log";
    double L = 25, rtol = 1e-12, atol = 1e-14;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand("reflect", "Reflection coefficient sweep");
  c.app->add_option("--n", p->n, "Amplitude n (real)");
  c.app->add_option("--xi", p->xi, "Width parameter xi > 0");
  c.app->add_option("--eta", p->eta, "Carrier wavenumber eta");
  c.app->add_option("--x0", p->x0, "Centre x0");
  c.app->add_option("--phi", p->phi, "Phase phi");
  c.app->add_option("--zeta-min", p->zeta_min, "First zeta");
  c.app->add_option("--zeta-max", p->zeta_max, "Last zeta");
  c.app->add_option("--points", p->points, "Number of zeta values");
  c.app->add_option("--spacing", p->spacing, "Zeta spacing")
      ->check(CLI::IsMember({"log", "lin"}));
  c.app->add_option("--L", p->L, "Half-width of the integration domain");
  c.app->add_option("--rtol", p->rtol, "Solver relative tolerance");
  c.app->add_option("--atol", p->atol, "Solver absolute tolerance");
  add_common(c, 1e-8);
  c.handler = [p, &c] {
    const auto zetas = p->spacing == "log"
                           ? log_spaced(p->zeta_min, p->zeta_max, p->points)
                           : lin_spaced(p->zeta_min, p->zeta_max, p->points);
    const AkulinSpec spec{p->n, p->xi, p->eta, p->x0, p->phi};
    const auto data =
        reflectivity_sweep(spec, zetas, solver(p->L, p->rtol, p->atol));
    Outcome o;
    o.metric = "max_R";
    o.table.columns = {"zeta", "re_a", "im_a", "re_b", "im_b", "R"};
    for (const auto& d : data) {
      o.table.rows.push_back({d.zeta, d.a.real(), d.a.imag(), d.b.real(),
                              d.b.imag(), d.R});
      o.value = std::max(o.value, d.R);
    }
    o.pass = o.value <= c.common.tol;
    return o;
  };
}

// -- susy-verify ------------------------------------------------------------

void add_susy_verify(CLI::App& app, Command& c) {
  struct P {
    int n_min = -3, n_max = 3;
    std::string transform = "all";
    double epsilon_shift = 0.0;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand("susy-verify",
                             "Check the SUSY factorizations of the chain");
  c.app->add_option("--n-min", p->n_min, "Smallest n");
  c.app->add_option("--n-max", p->n_max, "Largest n");
  c.app->add_option("--transform", p->transform, "Symmetry transform")
      ->check(CLI::IsMember({"I", "X", "Y", "Z", "all"}));
  c.app->add_option("--epsilon-shift", p->epsilon_shift,
                    "Offset added to every factorization constant");
  add_common(c, 1e-10);
  c.handler = [p, &c] {
    check_n_range(p->n_min, p->n_max);
    Outcome o;
    o.verify = true;
    o.metric = "max_residual";
    o.table.columns = {"n",         "transform",         "residual_H_n",
                       "residual_half", "residual_H_nplus1", "p2_exact_zero"};
    FactorizationOptions fo;
    fo.epsilon_shift = p->epsilon_shift;
    for (int n = p->n_min; n <= p->n_max; ++n) {
      for (const auto& t : transforms_for(p->transform)) {
        const auto r = verify_factorization(n, t, identity_window(), fo);
        o.table.rows.push_back({static_cast<long long>(n),
                                std::string(1, r.transform), r.residual_H_n,
                                r.residual_half, r.residual_H_nplus1,
                                static_cast<long long>(r.p2_exact_zero)});
        o.value = std::max(o.value, r.max_residual());
        o.pass = o.pass && r.passed(c.common.tol);
      }
    }
    return o;
  };
}

// -- intertwine-check -------------------------------------------------------

void add_intertwine_check(CLI::App& app, Command& c) {
  struct P {
    int n_min = -3, n_max = 3;
    std::string direction = "both";
    std::string transform = "all";
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand(
      "intertwine-check",
      "Chain-built intertwiners versus the closed form, and H' U = U H");
  c.app->add_option("--n-min", p->n_min, "Smallest n");
  c.app->add_option("--n-max", p->n_max, "Largest n");
  c.app->add_option("--direction", p->direction, "Chain direction")
      ->check(CLI::IsMember({"up", "down", "both"}));
  c.app->add_option("--transform", p->transform, "Symmetry transform")
      ->check(CLI::IsMember({"I", "X", "Y", "Z", "all"}));
  add_common(c, 1e-10);
  c.handler = [p, &c] {
    check_n_range(p->n_min, p->n_max);
    std::vector<Direction> dirs;
    if (p->direction != "down") dirs.push_back(Direction::up);
    if (p->direction != "up") dirs.push_back(Direction::down);
    const Grid window = identity_window();
    Outcome o;
    o.verify = true;
    o.metric = "max_distance";
    o.table.columns = {"n", "direction", "transform", "chain_distance",
                       "intertwining_distance"};
    for (int n = p->n_min; n <= p->n_max; ++n) {
      for (Direction d : dirs) {
        const auto closed = intertwiner_closed(n, d);
        const int m = d == Direction::up ? n + 1 : n - 1;
        const double rel = op_distance(compose(hamiltonian(m), closed),
                                       compose(closed, hamiltonian(n)), window);
        for (const auto& t : transforms_for(p->transform)) {
          const double dist =
              op_distance(intertwiner_from_chain(n, d, t), closed, window);
          o.table.rows.push_back(
              {static_cast<long long>(n),
               std::string(d == Direction::up ? "up" : "down"),
               std::string(1, t.name()), dist, rel});
          o.value = std::max({o.value, dist, rel});
        }
      }
    }
    o.pass = o.value <= c.common.tol;
    return o;
  };
}

// -- eigenchain -------------------------------------------------------------

void add_eigenchain(CLI::App& app, Command& c) {
  struct P {
    int n = 1;
    double lambda_re = 0.0, lambda_im = 0.7;
    double alpha = 1.0, beta = 1.0;
    double x_min = -20, x_max = 20;
    std::size_t grid_points = 4001;
    std::string scheme = "central8";
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand(
      "eigenchain", "Eigenstate of H_n built by the intertwiner chain");
  c.app->add_option("--n", p->n, "Target Hamiltonian index");
  c.app->add_option("--lambda-re", p->lambda_re, "Re lambda");
  c.app->add_option("--lambda-im", p->lambda_im, "Im lambda (zeta)");
  c.app->add_option("--alpha", p->alpha, "Weight of (e^{lambda x}, 0)");
  c.app->add_option("--beta", p->beta, "Weight of (0, e^{-lambda x})");
  c.app->add_option("--x-min", p->x_min, "Grid start");
  c.app->add_option("--x-max", p->x_max, "Grid end");
  c.app->add_option("--grid-points", p->grid_points, "Grid size");
  c.app->add_option("--scheme", p->scheme, "Finite-difference scheme")
      ->check(CLI::IsMember({"central4", "central8"}));
  add_common(c, 1e-6);
  c.handler = [p, &c] {
    const Grid grid(p->x_min, p->x_max, p->grid_points);
    const Scheme scheme =
        p->scheme == "central4" ? Scheme::central4 : Scheme::central8;
    const SpectralPoint lambda{cplx(p->lambda_re, p->lambda_im)};
    const SpinorField psi =
        chain_eigenstate(p->n, lambda, p->alpha, p->beta, grid, scheme);
    Outcome o;
    o.verify = true;
    o.metric = "eigen_residual";
    o.value = eigen_residual(hamiltonian(p->n), psi, lambda.lambda);
    o.pass = o.value <= c.common.tol;
    o.table.columns = {"x", "re_psi1", "im_psi1", "re_psi2", "im_psi2"};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      o.table.rows.push_back({grid[k], psi[k][0].real(), psi[k][0].imag(),
                              psi[k][1].real(), psi[k][1].imag()});
    }
    return o;
  };
}

// -- bound-states -----------------------------------------------------------

void add_bound_states(CLI::App& app, Command& c) {
  struct P {
    double n = 1, xi = 1, x0 = 0, phi = 0;
    double lambda_max = 3.0;
    int scan_points = 60;
    double L = 25, rtol = 1e-12, atol = 1e-14;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand("bound-states",
                             "Real eigenvalues by two-sided shooting");
  c.app->add_option("--n", p->n, "Amplitude n (real)");
  c.app->add_option("--xi", p->xi, "Width parameter xi > 0");
  c.app->add_option("--x0", p->x0, "Centre x0");
  c.app->add_option("--phi", p->phi, "Phase phi");
  c.app->add_option("--lambda-max", p->lambda_max, "Upper end of the scan");
  c.app->add_option("--scan-points", p->scan_points, "Scan resolution");
  c.app->add_option("--L", p->L, "Half-width of the integration domain");
  c.app->add_option("--rtol", p->rtol, "Solver relative tolerance");
  c.app->add_option("--atol", p->atol, "Solver absolute tolerance");
  add_common(c, 1e-8);
  c.handler = [p, &c] {
    const AkulinSpec spec{p->n, p->xi, 0.0, p->x0, p->phi};
    const auto set = bound_states(spec, p->lambda_max, p->scan_points,
                                  solver(p->L, p->rtol, p->atol));
    Outcome o;
    o.metric = "max_mismatch";
    o.table.columns = {"lambda", "mismatch"};
    for (std::size_t i = 0; i < set.eigenvalues.size(); ++i) {
      o.table.rows.push_back({set.eigenvalues[i], set.mismatch_values[i]});
      o.value = std::max(o.value, std::abs(set.mismatch_values[i]));
    }
    o.pass = o.value <= c.common.tol;
    return o;
  };
}

// -- soliton ----------------------------------------------------------------

void add_soliton(CLI::App& app, Command& c) {
  struct P {
    std::string equation = "sg";
    std::string kind = "kink";
    double xi = 1, x0 = 0, eta = 0, phi = 0;
    int sign = 1;
    std::string phase = "galilean";
    double h = 1e-3;
    double perturb = 0.0;
    double x_min = -8, x_max = 8, t_min = -3, t_max = 3;
    int nx = 41, nt = 21;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand("soliton",
                             "Closed-form sG / NLS solution and PDE residual");
  c.app->add_option("--equation", p->equation, "Equation")
      ->check(CLI::IsMember({"sg", "nls"}));
  c.app->add_option("--kind", p->kind, "Solution kind")
      ->check(CLI::IsMember(
          {"kink", "antikink", "two-soliton", "one-soliton", "breather"}));
  c.app->add_option("--xi", p->xi, "Scale xi > 0");
  c.app->add_option("--x0", p->x0, "Initial position");
  c.app->add_option("--eta", p->eta, "NLS velocity parameter (v = 2 eta)");
  c.app->add_option("--phi", p->phi, "NLS phase");
  c.app->add_option("--sign", p->sign,
                    "+1 or -1: NLS amplitude sign; sG two-soliton kinks (+1) "
                    "or antikinks (-1)")
      ->check(CLI::IsMember({-1, 1}));
  c.app->add_option("--phase", p->phase, "NLS carrier phase convention")
      ->check(CLI::IsMember({"galilean", "comoving"}));
  c.app->add_option("--step", p->h, "Finite-difference step in [1e-4, 1e-2]");
  c.app->add_option("--perturb", p->perturb,
                    "Adds perturb * x * t to the solution (negative control)");
  c.app->add_option("--x-min", p->x_min, "Sample window");
  c.app->add_option("--x-max", p->x_max, "Sample window");
  c.app->add_option("--t-min", p->t_min, "Sample window");
  c.app->add_option("--t-max", p->t_max, "Sample window");
  c.app->add_option("--nx", p->nx, "Samples in x")->check(CLI::Range(2, 100000));
  c.app->add_option("--nt", p->nt, "Samples in t")->check(CLI::Range(2, 100000));
  add_common(c, 1e-6);
  c.handler = [p, &c] {
    const ResidualWindow w{p->x_min, p->x_max, p->t_min, p->t_max, p->nx,
                           p->nt};
    const double eps = p->perturb;
    std::function<cplx(double, double)> field;
    Outcome o;
    o.verify = true;
    o.metric = "pde_residual";
    if (p->equation == "sg") {
      SGSolution base;
      if (p->kind == "kink") {
        base = SGSolution::kink(p->xi, p->x0);
      } else if (p->kind == "antikink") {
        base = SGSolution::antikink(p->xi, p->x0);
      } else if (p->kind == "two-soliton") {
        base = SGSolution::two_soliton(p->xi, p->x0, p->sign > 0);
      } else {
        throw std::invalid_argument("sg kinds: kink, antikink, two-soliton");
      }
      const SGSolution sol =
          eps == 0.0 ? base
                     : SGSolution::custom(
                           [base, eps](double x, double t) {
                             return base(x, t) + eps * x * t;
                           },
                           base.soliton_count());
      o.value = sg_residual(sol, p->h, w);
      field = [sol](double x, double t) { return cplx(sol(x, t)); };
    } else {
      NLSSolution sol;
      if (p->kind == "one-soliton") {
        sol.kind = NLSKind::one_soliton;
      } else if (p->kind == "breather") {
        sol.kind = NLSKind::breather;
      } else {
        throw std::invalid_argument("nls kinds: one-soliton, breather");
      }
      if (!(p->xi > 0.0)) throw std::invalid_argument("xi must be positive");
      sol.sign = p->sign;
      sol.xi = p->xi;
      sol.eta = p->eta;
      sol.x0 = p->x0;
      sol.phi = p->phi;
      sol.phase =
          p->phase == "galilean" ? NLSPhase::galilean : NLSPhase::comoving;
      field = [sol, eps](double x, double t) {
        return nls_eval(sol, x, t) + eps * x * t;
      };
      o.value = nls_residual(field, p->h, w);
    }
    o.pass = o.value <= c.common.tol;
    o.table.columns = {"x", "t", "re_u", "im_u"};
    for (int i = 0; i < w.nx; ++i) {
      const double x = i + 1 == w.nx
                           ? w.x_max
                           : w.x_min + (w.x_max - w.x_min) * i / (w.nx - 1);
      for (int j = 0; j < w.nt; ++j) {
        const double t = j + 1 == w.nt
                             ? w.t_max
                             : w.t_min + (w.t_max - w.t_min) * j / (w.nt - 1);
        const cplx u = field(x, t);
        o.table.rows.push_back({x, t, u.real(), u.imag()});
      }
    }
    return o;
  };
}

// -- darboux-check ----------------------------------------------------------

void add_darboux_check(CLI::App& app, Command& c) {
  struct P {
    int n_from = 0;
    std::string direction = "up";
    std::vector<double> lambda_im{0.4, 1.1};
    double lambda_re = 0.0;
    std::string convention = "direct";
    double eigen_tol = 1e-6;
    double x_min = -10, x_max = 10;
    std::size_t grid_points = 2001;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand(
      "darboux-check",
      "Darboux operator versus the SUSY intertwiner on eigenspaces");
  c.app->add_option("--n-from", p->n_from,
                    "Index of the background Hamiltonian (canonical fixed "
                    "state: 0)");
  c.app->add_option("--direction", p->direction, "Intertwiner to compare")
      ->check(CLI::IsMember({"up", "down"}));
  c.app->add_option("--lambda-im", p->lambda_im,
                    "Imaginary parts of lambda, comma separated")
      ->delimiter(',');
  c.app->add_option("--lambda-re", p->lambda_re, "Real part shared by all lambda");
  c.app->add_option("--convention", p->convention,
                    "zeta ratio direct or reciprocal")
      ->check(CLI::IsMember({"direct", "reciprocal"}));
  c.app->add_option("--eigen-tol", p->eigen_tol,
                    "Tolerance on the eigen-residual of U psi");
  c.app->add_option("--x-min", p->x_min, "Grid start");
  c.app->add_option("--x-max", p->x_max, "Grid end");
  c.app->add_option("--grid-points", p->grid_points, "Grid size");
  add_common(c, 1e-8);
  c.handler = [p, &c] {
    if (p->lambda_im.empty()) throw std::invalid_argument("no lambda values");
    const Grid grid(p->x_min, p->x_max, p->grid_points);
    const auto data = build_darboux(
        FixedEigenstate::canonical(), ScalarCoeff::constant(0.0), grid,
        p->convention == "reciprocal" ? ZetaConvention::reciprocal
                                      : ZetaConvention::direct);
    std::vector<SpectralPoint> lambdas;
    for (double im : p->lambda_im) {
      lambdas.push_back({cplx(p->lambda_re, im)});
    }
    const Direction dir =
        p->direction == "up" ? Direction::up : Direction::down;
    const auto rep = conjecture_check(data, p->n_from, dir, lambdas, grid);
    Outcome o;
    o.verify = true;
    o.metric = "max_rel_dev";
    o.value = rep.max_rel_dev;
    o.pass = o.value <= c.common.tol;
    o.table.columns = {"lambda_re",       "lambda_im",       "re_scale",
                       "im_scale",        "residual",        "mirror_re_scale",
                       "mirror_im_scale", "mirror_residual", "eigen_residual_up",
                       "eigen_residual_down"};
    for (const auto& pt : rep.points) {
      o.table.rows.push_back(
          {pt.lambda.real(), pt.lambda.imag(), pt.target.scale.real(),
           pt.target.scale.imag(), pt.target.residual, pt.mirror.scale.real(),
           pt.mirror.scale.imag(), pt.mirror.residual, pt.eigen_residual_up,
           pt.eigen_residual_down});
      const double eig = dir == Direction::up ? pt.eigen_residual_up
                                              : pt.eigen_residual_down;
      o.pass = o.pass && eig <= p->eigen_tol;
    }
    return o;
  };
}

// -- pulse ------------------------------------------------------------------

void add_pulse(CLI::App& app, Command& c) {
  struct P {
    double n = 1, tau = 1;
    double delta_min = -10, delta_max = 10;
    std::size_t points = 21;
    double horizon = 0.0;
    double rtol = 1e-12, atol = 1e-14;
  };
  auto p = std::make_shared<P>();
  c.app = app.add_subcommand("pulse", "Two-level atom under a sech pulse");
  c.app->add_option("--n", p->n, "Pulse area parameter n");
  c.app->add_option("--tau", p->tau, "Pulse duration tau > 0");
  c.app->add_option("--delta-min", p->delta_min, "First detuning");
  c.app->add_option("--delta-max", p->delta_max, "Last detuning");
  c.app->add_option("--points", p->points, "Number of detunings");
  c.app->add_option("--horizon", p->horizon,
                    "Integrate over [-T, T]; 0 selects 40 tau");
  c.app->add_option("--rtol", p->rtol, "Solver relative tolerance");
  c.app->add_option("--atol", p->atol, "Solver absolute tolerance");
  add_common(c, 1e-8);
  c.handler = [p, &c] {
    const auto deltas = lin_spaced(p->delta_min, p->delta_max, p->points);
    SolverOptions opts;
    opts.rtol = p->rtol;
    opts.atol = p->atol;
    Outcome o;
    o.metric = "max_p_transfer";
    o.table.columns = {"delta", "p_transfer"};
    for (double d : deltas) {
      PulseSpec spec{p->n, p->tau, d, std::nullopt};
      if (p->horizon != 0.0) spec.horizon = p->horizon;
      PulseResult r;
      try {
        r = simulate_pulse(spec, opts);
      } catch (const std::exception& e) {
        throw SweepPointError(d, e.what());
      }
      o.table.rows.push_back({d, r.p_transfer});
      o.value = std::max(o.value, r.p_transfer);
    }
    o.pass = o.value <= c.common.tol;
    return o;
  };
}

std::string summary_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

// The value of --config in `args`, if present.
std::optional<std::string> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zakharov-Shabat / SUSY chain toolkit", "zssusy"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough(false);

  // Commands are referenced by their handlers, so the storage must not move.
  std::array<Command, 8> cmds;
  add_reflect(app, cmds[0]);
  add_susy_verify(app, cmds[1]);
  add_intertwine_check(app, cmds[2]);
  add_eigenchain(app, cmds[3]);
  add_bound_states(app, cmds[4]);
  add_soliton(app, cmds[5]);
  add_darboux_check(app, cmds[6]);
  add_pulse(app, cmds[7]);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1),
                                argv.end());
  if (args.empty()) {
    out << app.help();
    return kUsage;
  }

  // Config entries become flags placed before the explicit ones.
  if (const auto cfg = find_config(args)) {
    Command* target = nullptr;
    for (auto& c : cmds) {
      if (c.app->get_name() == args[0]) target = &c;
    }
    if (target == nullptr) {
      err << "zssusy: --config needs a subcommand first\n";
      return kUsage;
    }
    std::map<std::string, std::string> entries;
    try {
      entries = read_config(*cfg);
    } catch (const std::exception& e) {
      err << "zssusy: " << e.what() << "\n";
      return kUsage;
    }
    for (const auto& [key, value] : entries) {
      if (key == "config" || key == "help" ||
          target->app->get_option_no_throw("--" + key) == nullptr) {
        err << "zssusy: unknown config key '" << key << "' for "
            << args[0] << "\n";
        return kUsage;
      }
    }
    std::vector<std::string> rest(args.begin() + 1, args.end());
    rest = merge_config(entries, rest);
    rest.insert(rest.begin(), args[0]);
    args = std::move(rest);
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    // Subcommand --help surfaces as CallForHelp from the subcommand.
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Command* cmd = nullptr;
  for (auto& c : cmds) {
    if (c.app->parsed()) cmd = &c;
  }
  const std::string name = cmd->app->get_name();

  Outcome outcome;
  try {
    outcome = cmd->handler();
  } catch (const VerificationFailure& e) {
    err << name << ": verification failure: " << e.what() << "\n";
    out << name << " status=fail (" << e.what() << ")\n";
    return kVerification;
  } catch (const SweepPointError& e) {
    err << name << ": at " << format_double(e.point()) << ": " << e.what()
        << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return kUsage;
  }

  const Format format =
      cmd->common.format == "json" ? Format::json : Format::csv;
  const std::string path = cmd->common.out.empty()
                               ? default_output_path(name, format)
                               : cmd->common.out;
  try {
    write_table(outcome.table, format, path);
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return kUsage;
  }

  out << name << " " << outcome.metric << "=" << summary_number(outcome.value)
      << " tol=" << summary_number(cmd->common.tol)
      << " rows=" << outcome.table.rows.size()
      << " status=" << (outcome.pass ? "pass" : "fail") << " out=" << path
      << "\n";
  if (outcome.verify && !outcome.pass) return kVerification;
  return kSuccess;
}

int run(const std::vector<std::string>& argv) {
  return run(argv, std::cout, std::cerr);
}

}  // namespace zssusy::cli
