#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "output.hpp"
#include "randflight/charfn.hpp"
#include "randflight/error.hpp"
#include "randflight/gamma.hpp"
#include "randflight/moments.hpp"
#include "randflight/simulator.hpp"
#include "randflight/symbolic.hpp"

namespace rflight::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string out;
};

CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& description, Common& common) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--out", common.out, "Write output to this file instead of stdout");
  return sub;
}

/// Parameters of the flight shared by moment and simulate. m defaults to the index length.
struct FlightFlags {
  std::string index;
  long m = 0;
  double c = 1.0;
  double lambda = 1.0;

  void add(CLI::App* sub, bool index_required) {
    auto* opt = sub->add_option("--index", index, "Moment multi-index, e.g. 2,2,0");
    if (index_required) opt->required();
    sub->add_option("--m", m, "Dimension (default: length of --index)");
    sub->add_option("--c", c, "Speed")->capture_default_str();
    sub->add_option("--lambda", lambda, "Switching intensity")->capture_default_str();
  }

  std::pair<FlightParams, MultiIndex> resolve() const {
    const MultiIndex idx = MultiIndex::parse(index);
    const long dim = m == 0 ? static_cast<long>(idx.size()) : m;
    const FlightParams params = validate_params(dim, c, lambda);
    idx.check_dimension(params);
    return {params, idx};
  }
};

// ---------------------------------------------------------------- verify-gamma

void add_verify_gamma(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    std::string m_list = "3,4,5,6,7,8,9,10";
    unsigned max_n = 200;
    std::string format = "text";
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "verify-gamma", "Check the closed-form gamma coefficients against the recurrence",
                         f->common);
  sub->add_option("--m-list", f->m_list, "Comma-separated dimensions")->capture_default_str();
  sub->add_option("--max-n", f->max_n, "Largest gamma index")->capture_default_str();
  sub->add_option("--format", f->format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

  sub->callback([f, &status] {
    std::vector<unsigned> dims = parse_unsigned_list(f->m_list);
    const auto report = verify_closed_forms(f->max_n, dims);
    OutputTarget target(f->common.out);
    auto& out = target.stream();
    if (f->format == "csv") {
      CsvWriter csv(out, {"m", "n", "k", "recurrence", "closed_form", "match"});
      for (const auto& r : report.rows) {
        csv.row({std::to_string(r.m), std::to_string(r.n), std::to_string(r.k), r.recurrence.to_string(),
                 r.closed_form.to_string(), r.match ? "true" : "false"});
      }
    } else {
      for (unsigned m : dims) {
        std::size_t rows = 0, matched = 0;
        for (const auto& r : report.rows) {
          if (r.m != m) continue;
          ++rows;
          matched += r.match;
        }
        out << "m=" << m << ": " << matched << "/" << rows << " coefficients match\n";
      }
      if (report.first_mismatch) {
        const auto& r = *report.first_mismatch;
        out << "first mismatch: m=" << r.m << " n=" << r.n << " |alpha|^" << 2 * r.k
            << " recurrence=" << r.recurrence.to_string() << " closed_form=" << r.closed_form.to_string() << "\n";
      }
      out << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    status = report.passed() ? kOk : kCheckFailed;
  });
}

// ---------------------------------------------------------------- coeffs

void add_coeffs(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    unsigned m = 3;
    unsigned max_n = 10;
    bool symbolic = false;
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "coeffs", "Dump the gamma_n coefficient table", f->common);
  sub->add_option("--m", f->m, "Dimension")->capture_default_str();
  sub->add_option("--max-n", f->max_n, "Largest gamma index")->capture_default_str();
  sub->add_flag("--symbolic", f->symbolic, "Keep the dimension symbolic (coefficients are rational functions of m)");

  sub->callback([f, &status] {
    OutputTarget target(f->common.out);
    auto& out = target.stream();
    if (f->symbolic) {
      const auto g = symbolic::gamma_coefficients(f->max_n);
      CsvWriter csv(out, {"n", "k", "c_power", "lambda_power", "coefficient"});
      for (unsigned n = 1; n <= f->max_n; ++n)
        for (unsigned k = 0; k < g[n].size(); ++k) {
          csv.row({std::to_string(n), std::to_string(k), std::to_string(2 * k), std::to_string(n - 1 - 2 * k),
                   g[n][k].to_string()});
        }
    } else {
      // validates m >= 3
      const FlightParams params = validate_params(f->m, 1.0, 1.0);
      const auto table = gamma_table(params.m(), f->max_n);
      CsvWriter csv(out, {"n", "k", "c_power", "lambda_power", "coefficient", "approx"});
      for (unsigned n = 1; n <= f->max_n; ++n)
        for (unsigned k = 0; k < table->terms(n); ++k) {
          csv.row({std::to_string(n), std::to_string(k), std::to_string(2 * k), std::to_string(n - 1 - 2 * k),
                   to_string(table->raw(n, k)), fmt_real(table->raw_double(n, k))});
        }
    }
    status = kOk;
  });
}

// ---------------------------------------------------------------- moment

void add_moment(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    FlightFlags flight;
    std::string grid = "0:5:0.01";
    bool oracle = false;
    std::string format = "csv";
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "moment", "Tabulate a closed-form second moment over a time grid", f->common);
  f->flight.add(sub, true);
  sub->add_option("--t-grid", f->grid, "start:stop:step, stop inclusive")->capture_default_str();
  sub->add_flag("--oracle", f->oracle, "Add the series-oracle value and its absolute difference");
  sub->add_option("--format", f->format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  sub->callback([f, &status] {
    const auto [params, index] = f->flight.resolve();
    const auto grid = parse_grid(f->grid);
    if (grid.front() < 0.0) throw Error(ErrorKind::InvalidArgument, "t-grid must start at t >= 0");
    classify(index, params);

    std::vector<std::string> header{"t", "closed_form"};
    if (f->oracle) {
      header.push_back("series_oracle");
      header.push_back("abs_diff");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(grid.size());
    for (double t : grid) {
      const double v = moment({params, index, t});
      std::vector<double> row{t, v};
      if (f->oracle) {
        const double s = moment_series({params, index, t});
        row.push_back(s);
        row.push_back(std::abs(s - v));
      }
      rows.push_back(std::move(row));
    }

    OutputTarget target(f->common.out);
    auto& out = target.stream();
    if (f->format == "json") {
      json j;
      j["index"] = index.to_string();
      j["m"] = params.m();
      j["c"] = params.c();
      j["lambda"] = params.lambda();
      j["columns"] = header;
      j["rows"] = rows;
      out << j.dump(2) << "\n";
    } else {
      CsvWriter csv(out, header);
      for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (double v : row) cells.push_back(fmt_real(v));
        csv.row(cells);
      }
    }
    status = kOk;
  });
}

// ---------------------------------------------------------------- simulate

void add_simulate(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    FlightFlags flight;
    double t = 1.0;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string format = "csv";
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "simulate", "Monte Carlo estimate of a moment against its analytic value", f->common);
  f->flight.add(sub, true);
  sub->add_option("--t", f->t, "Horizon time")->capture_default_str();
  sub->add_option("--samples", f->samples, "Number of trajectories")->capture_default_str();
  sub->add_option("--seed", f->seed, "64-bit seed")->capture_default_str();
  sub->add_option("--workers", f->workers, "Worker threads (default: RF_THREADS or 1)");
  sub->add_option("--format", f->format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  sub->callback([f, sub, &status] {
    const auto [params, index] = f->flight.resolve();

    // Closed form for the supported shapes; reflection symmetry makes any
    // index with an odd entry vanish.
    double analytic = 0.0;
    const auto entries = index.entries();
    const bool has_odd = std::any_of(entries.begin(), entries.end(), [](unsigned q) { return q % 2 == 1; });
    if (!has_odd) analytic = moment({params, index, f->t});

    const unsigned workers = sub->count("--workers") ? f->workers : default_workers(1);
    const SimConfig config{params, f->t, f->samples, f->seed, workers};
    config.validate();
    const auto est = estimate_moment(config, index);

    double z = 0.0;
    if (est.std_error > 0.0) {
      z = (est.mean - analytic) / est.std_error;
    } else if (est.mean != analytic) {
      z = std::copysign(INFINITY, est.mean - analytic);
    }

    OutputTarget target(f->common.out);
    auto& out = target.stream();
    if (f->format == "json") {
      json j;
      j["index"] = index.to_string();
      j["m"] = params.m();
      j["c"] = params.c();
      j["lambda"] = params.lambda();
      j["t"] = f->t;
      j["samples"] = est.samples;
      j["seed"] = f->seed;
      j["estimate"] = est.mean;
      j["stderr"] = est.std_error;
      j["analytic"] = analytic;
      j["z"] = fmt_real(z);
      out << j.dump(2) << "\n";
    } else {
      CsvWriter csv(out, {"index", "m", "c", "lambda", "t", "samples", "seed", "estimate", "stderr", "analytic", "z"});
      csv.row({index.to_string(), std::to_string(params.m()), fmt_real(params.c()), fmt_real(params.lambda()),
               fmt_real(f->t), std::to_string(est.samples), std::to_string(f->seed), fmt_real(est.mean),
               fmt_real(est.std_error), fmt_real(analytic), fmt_real(z)});
    }
    status = std::abs(z) <= 4.0 ? kOk : kCheckFailed;
  });
}

// ---------------------------------------------------------------- kac

void add_kac(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    double rho = 1.0;
    unsigned m = 3;
    double t = 2.0;
    std::string lambdas = "100,1000,10000";
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "kac", "2-marginal under the scaling c^2/lambda = rho", f->common);
  sub->add_option("--rho", f->rho, "Limit ratio c^2/lambda")->capture_default_str();
  sub->add_option("--m", f->m, "Dimension")->capture_default_str();
  sub->add_option("--t", f->t, "Time")->capture_default_str();
  sub->add_option("--lambda-list", f->lambdas, "Increasing intensities")->capture_default_str();

  sub->callback([f, &status] {
    const auto rows = kac_sequence({f->rho, parse_real_list(f->lambdas)}, f->m, f->t);
    OutputTarget target(f->common.out);
    CsvWriter csv(target.stream(), {"lambda", "c", "value", "limit", "abs_err"});
    bool non_increasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      csv.row({fmt_real(r.lambda), fmt_real(r.c), fmt_real(r.value), fmt_real(r.limit), fmt_real(r.abs_err)});
      if (i > 0 && r.abs_err > rows[i - 1].abs_err) non_increasing = false;
    }
    status = non_increasing ? kOk : kCheckFailed;
  });
}

// ---------------------------------------------------------------- lemmas

void add_lemmas(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    std::string grid = "-10:10:0.5";
    unsigned terms = 80;
    double tol = 1e-9;
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "lemmas", "Partial sums of the two series identities against their closed forms",
                         f->common);
  sub->add_option("--x-grid", f->grid, "start:stop:step, stop inclusive")->capture_default_str();
  sub->add_option("--terms", f->terms, "Last summation index")->capture_default_str();
  sub->add_option("--tol", f->tol, "Largest accepted |lhs - rhs|")->capture_default_str();

  sub->callback([f, &status] {
    const auto grid = parse_grid(f->grid);
    OutputTarget target(f->common.out);
    CsvWriter csv(target.stream(), {"x", "a1_lhs", "a1_rhs", "a1_abs_err", "a2_lhs", "a2_rhs", "a2_abs_err"});
    double worst = 0.0;
    for (double x : grid) {
      const double l1 = lemma_lhs_partial(Lemma::A1, x, f->terms);
      const double r1 = lemma_a1_rhs(x);
      const double l2 = lemma_lhs_partial(Lemma::A2, x, f->terms);
      const double r2 = lemma_a2_rhs(x);
      const double e1 = std::abs(l1 - r1);
      const double e2 = std::abs(l2 - r2);
      worst = std::max({worst, e1, e2});
      csv.row({fmt_real(x), fmt_real(l1), fmt_real(r1), fmt_real(e1), fmt_real(l2), fmt_real(r2), fmt_real(e2)});
    }
    std::cerr << "max |lhs - rhs| = " << fmt_real(worst) << "\n";
    status = worst < f->tol ? kOk : kCheckFailed;
  });
}

// ---------------------------------------------------------------- charfn

void add_charfn(CLI::App& app, int& status) {
  struct Flags {
    Common common;
    std::string alpha;
    double t = 0.0;
    double tol = 1e-17;
    unsigned max_terms = 400;
    double budget = 1e-10;
    double c = 1.0;
    double lambda = 1.0;
  };
  auto f = std::make_shared<Flags>();
  auto* sub = subcommand(app, "charfn", "Evaluate the characteristic function H(alpha, t)", f->common);
  sub->add_option("--alpha", f->alpha, "Comma-separated vector; its length is the dimension")->required();
  sub->add_option("--t", f->t, "Time")->required();
  sub->add_option("--tol", f->tol, "Series truncation tolerance")->capture_default_str();
  sub->add_option("--max-terms", f->max_terms, "Series term limit")->capture_default_str();
  sub->add_option("--budget", f->budget, "Largest tolerated rounding-error estimate")->capture_default_str();
  sub->add_option("--c", f->c, "Speed")->capture_default_str();
  sub->add_option("--lambda", f->lambda, "Switching intensity")->capture_default_str();

  sub->callback([f, &status] {
    auto alpha = parse_real_list(f->alpha);
    const auto params = validate_params(static_cast<long>(alpha.size()), f->c, f->lambda);
    const double value = char_fn({params, std::move(alpha), f->t, SeriesControl::adaptive(f->tol, f->max_terms), f->budget});
    OutputTarget target(f->common.out);
    target.stream() << fmt_real(value) << "\n";
    status = kOk;
  });
}

}  // namespace

void add_commands(CLI::App& app, int& status) {
  add_verify_gamma(app, status);
  add_coeffs(app, status);
  add_moment(app, status);
  add_simulate(app, status);
  add_kac(app, status);
  add_lemmas(app, status);
  add_charfn(app, status);
}

}  // namespace rflight::cli
