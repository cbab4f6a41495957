#include "latpack/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latpack/acceptance.hpp"
#include "latpack/approx.hpp"
#include "latpack/bounds.hpp"
#include "latpack/errors.hpp"
#include "latpack/lattice.hpp"
#include "latpack/museq.hpp"
#include "latpack/report.hpp"
#include "latpack/thetaflow.hpp"

namespace latpack::cli {

namespace {

using report::Json;

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigVector parse_big_list(const std::string& text) {
  BigVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("--s: expected comma-separated positive integers, got '" + text + "'");
    }
    out.emplace_back(item);
  }
  if (out.empty()) throw std::invalid_argument("--s: empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("expected comma-separated integers: " + text);
    out.push_back(v);
  }
  return out;
}

double env_budget(double fallback) {
  const char* raw = std::getenv(kBudgetEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0)) {
    throw std::invalid_argument(std::string(kBudgetEnv) + " must be a positive number");
  }
  return v;
}

Json density_json(const DensityReport& d) {
  return {{"dim", d.dim},
          {"minimum", report::big_to_json(d.minimum)},
          {"determinant", report::big_to_json(d.determinant)},
          {"density", d.density},
          {"center_density", d.center_density},
          {"hermite", d.hermite},
          {"log_center_density", d.log_center_density}};
}

Json matrix_json(const std::vector<BigVector>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(report::big_vector_to_json(row));
  return out;
}

// Collected option values; each subcommand reads the ones it declared.
struct Args {
  std::int64_t mu = 0;
  int dim = 0;
  std::string s;
  double lo = 0, hi = 0;
  int n = 0;
  double x = 0, y = 0;
  double delta_prev = 0, delta = 0, gamma = 0;
  std::string form = "center";
  int max_n = 0;
  bool csv = false;
  bool all_rows = false;
  std::string ladder = "128,256,512,1024";
  std::string gram_file;
  double kappa = 0;
  bool verify = false;
  std::string only;
};

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer lattices from orthogonal complements, exact minima and density bounds", "latpack"};
  app.require_subcommand(1);
  Args a;

  auto* museq_cmd = app.add_subcommand("museq", "mu-sequences");
  museq_cmd->require_subcommand(1);
  auto* greedy = museq_cmd->add_subcommand("greedy", "greedy mu-sequence of a given length");
  greedy->add_option("--mu", a.mu, "minimum norm")->required()->check(CLI::Range(2, 1000000));
  greedy->add_option("--dim", a.dim, "lattice dimension")->required()->check(CLI::Range(1, 64));
  auto* certify = museq_cmd->add_subcommand("certify", "check min Lambda(s) >= mu");
  certify->add_option("--s", a.s, "comma-separated entries, first entry 1")->required();
  certify->add_option("--mu", a.mu)->required()->check(CLI::Range(2, 1000000));
  auto* obstruct = museq_cmd->add_subcommand("obstructions", "obstruction sets for the next entry in [lo, hi]");
  obstruct->add_option("--s", a.s)->required();
  obstruct->add_option("--mu", a.mu)->required()->check(CLI::Range(2, 1000000));
  obstruct->add_option("--lo", a.lo)->required();
  obstruct->add_option("--hi", a.hi)->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice invariants");
  lattice_cmd->require_subcommand(1);
  auto* lreport = lattice_cmd->add_subcommand("report", "determinant, minimum and densities of Lambda(s)");
  lreport->add_option("--s", a.s)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "density inequalities");
  bounds_cmd->require_subcommand(1);
  auto* bf = bounds_cmd->add_subcommand("f", "F_n(x, y)");
  auto* by = bounds_cmd->add_subcommand("y", "Y_n(x)");
  auto* bc = bounds_cmd->add_subcommand("cn", "C_n(x) and the implied center-density bound");
  for (auto* c : {bf, by, bc}) {
    c->add_option("--n", a.n)->required()->check(CLI::Range(2, 200));
    c->add_option("--x", a.x)->required()->check(CLI::PositiveNumber);
  }
  bf->add_option("--y", a.y)->required()->check(CLI::NonNegativeNumber);
  auto* bt = bounds_cmd->add_subcommand("theorem1", "residual of the consecutive-dimension inequality");
  bt->add_option("--n", a.n)->required()->check(CLI::Range(2, 200));
  bt->add_option("--delta-prev", a.delta_prev, "center density in dimension n-1")->required()->check(CLI::PositiveNumber);
  bt->add_option("--delta", a.delta, "center density in dimension n")->required()->check(CLI::PositiveNumber);
  bt->add_option("--form", a.form)->check(CLI::IsMember({"density", "center", "hermite"}));
  auto* bm = bounds_cmd->add_subcommand("mordell", "gamma_{n-1}^((n-1)/(n-2))");
  bm->add_option("--n", a.n)->required()->check(CLI::Range(3, 100000));
  bm->add_option("--gamma", a.gamma, "gamma_{n-1}")->required()->check(CLI::PositiveNumber);

  auto* theta_cmd = app.add_subcommand("theta", "theta flow");
  theta_cmd->require_subcommand(1);
  auto* tfix = theta_cmd->add_subcommand("fixpoint", "fixed point of Omega");
  auto* ttable = theta_cmd->add_subcommand("table", "d_n and Omega iterates");
  ttable->add_option("--max-n", a.max_n)->required()->check(CLI::Range(1, 100000));
  ttable->add_flag("--csv", a.csv, "emit CSV instead of JSON");
  ttable->add_flag("--all", a.all_rows, "every n instead of powers of two");
  auto* tfit = theta_cmd->add_subcommand("fit", "1/n expansion of d_n");
  tfit->add_option("--ladder", a.ladder, "four distinct dimensions");

  auto* approx_cmd = app.add_subcommand("approx", "approximate a Gram matrix by Lambda(s)");
  approx_cmd->add_option("--gram", a.gram_file, "JSON file {\"n\": int, \"gram\": [[...]]}")->required();
  approx_cmd->add_option("--kappa", a.kappa)->required()->check(CLI::Range(1.0, 1e15));
  approx_cmd->add_flag("--verify", a.verify);

  auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
  verify_cmd->require_subcommand(1);
  auto* vpaper = verify_cmd->add_subcommand("paper", "run the full acceptance sweep");
  vpaper->add_option("--only", a.only, "comma-separated criterion ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  report::ReportEnvelope env;
  bool csv_written = false;
  int code = kOk;
  try {
    EnumerationOptions enum_opts;
    enum_opts.node_budget = env_budget(enum_opts.node_budget);
    museq::Options mopts;
    mopts.enumeration = enum_opts;

    if (*greedy) {
      env.command = "museq greedy";
      env.inputs = {{"mu", a.mu}, {"dim", a.dim}};
      const auto seq = museq::greedy_sequence(a.mu, a.dim, mopts);
      env.outputs = {{"s", report::svector_to_json(seq.s)},
                     {"certified", seq.certified},
                     {"density", density_json(density_report(seq.s, enum_opts))},
                     {"density_floor", museq::greedy_density_floor(a.mu, a.dim)}};
      env.meta.tolerances = {{"s", "exact"}, {"density", "double"}};
    } else if (*certify) {
      env.command = "museq certify";
      const SVector s(parse_big_list(a.s));
      env.inputs = {{"s", report::svector_to_json(s)}, {"mu", a.mu}};
      const auto seq = museq::certify(s, a.mu, mopts);
      env.outputs = {{"certified", seq.certified}};
      if (s.dim() >= 1) env.outputs["minimum"] = report::big_to_json(shortest_vector(basis_from_s(s), enum_opts).minimum);
      env.meta.tolerances = {{"certified", "exact"}, {"minimum", "exact"}};
    } else if (*obstruct) {
      env.command = "museq obstructions";
      const SVector s(parse_big_list(a.s));
      env.inputs = {{"s", report::svector_to_json(s)}, {"mu", a.mu}, {"lo", a.lo}, {"hi", a.hi}};
      const auto spec = museq::IntervalSpec::from_bounds(a.lo, a.hi, a.mu, static_cast<int>(s.size()));
      const auto rep = museq::interval_obstructions(s, a.mu, spec, mopts);
      Json per_k = Json::array();
      for (const auto& k : rep.per_k) {
        per_k.push_back({{"k", k.k},
                         {"obstructed", k.obstructed},
                         {"witnesses", k.witnesses},
                         {"primitive_witnesses", k.primitive_witnesses},
                         {"residue_counts", k.residue_counts},
                         {"total", k.total},
                         {"residue_spread", k.residue_spread}});
      }
      const auto next = museq::extend_in_interval(s, a.mu, spec, mopts);
      env.outputs = {{"k_max", rep.k_max},
                     {"cutoff_a", rep.cutoff_a},
                     {"per_k", per_k},
                     {"union", rep.union_set},
                     {"union_size", rep.union_size},
                     {"interval_size", rep.interval_size},
                     {"invariants_hold", rep.invariants_hold()},
                     {"sigma", spec.sigma},
                     {"sigma_tilde", spec.sigma_tilde},
                     {"epsilon", spec.epsilon},
                     {"first_free", next ? Json(*next) : Json(nullptr)}};
      env.meta.tolerances = {{"per_k", "exact"}, {"first_free", "exact, SVP-certified"}};
    } else if (*lreport) {
      env.command = "lattice report";
      const SVector s(parse_big_list(a.s));
      if (s.dim() < 1) throw std::invalid_argument("--s: need at least two entries");
      env.inputs = {{"s", report::svector_to_json(s)}};
      const auto sv = shortest_vector(basis_from_s(s), enum_opts);
      env.outputs = density_json(density_report(s.dim(), sv.minimum, determinant(s)));
      env.outputs["witness"] = report::big_vector_to_json(sv.witness);
      env.outputs["enumeration_nodes"] = sv.nodes;
      env.meta.tolerances = {{"minimum", "exact"}, {"determinant", "exact"}, {"density", "double"}};
    } else if (*bf) {
      env.command = "bounds f";
      env.inputs = {{"n", a.n}, {"x", a.x}, {"y", a.y}};
      env.outputs = {{"F", bounds::eval_F(a.n, a.x, a.y)}, {"level", bounds::level(a.n)}};
      env.meta.tolerances = {{"F", 1e-15}};
    } else if (*by) {
      env.command = "bounds y";
      env.inputs = {{"n", a.n}, {"x", a.x}};
      const double y = bounds::eval_Y(a.n, a.x);
      env.outputs = {{"Y", y}, {"F_at_Y", bounds::eval_F(a.n, a.x, y)}, {"level", bounds::level(a.n)}};
      env.meta.tolerances = {{"Y", "max(1e-12, 4 ulp)"}};
    } else if (*bc) {
      env.command = "bounds cn";
      env.inputs = {{"n", a.n}, {"x", a.x}};
      const auto e = bounds::envelope(a.n, a.x);
      const double bound = std::exp(-a.n * std::log(2.0) + 0.5 * a.n * std::log(e.value));
      env.outputs = {{"C", e.value},
                     {"argmax", e.argmax},
                     {"right_edge", e.right_edge},
                     {"interior_sup", e.interior_sup},
                     {"center_density_bound", bound},
                     {"hermite_bound", e.value}};
      env.meta.tolerances = {{"C", "Y to max(1e-12, 4 ulp); argmax to 1e-10 relative"}};
    } else if (*bt) {
      env.command = "bounds theorem1";
      const auto kind = bounds::parse_kind(a.form);
      env.inputs = {{"n", a.n}, {"delta_prev", a.delta_prev}, {"delta", a.delta}, {"form", a.form}};
      const double r = bounds::check_theorem1({a.n, a.delta_prev, a.delta, kind});
      const auto chain = bounds::marin_chain(a.n, a.delta_prev, a.delta);
      env.outputs = {{"residual", r},
                     {"holds", r >= 0},
                     {"chain", {{"lhs", chain.lhs}, {"mid", chain.mid}, {"rhs", chain.rhs}, {"monotone", chain.monotone()}}},
                     {"trivial_lower", bounds::trivial_lower(a.delta_prev)}};
      env.meta.tolerances = {{"residual", 1e-12}};
    } else if (*bm) {
      env.command = "bounds mordell";
      env.inputs = {{"n", a.n}, {"gamma", a.gamma}};
      env.outputs = {{"gamma_upper", bounds::mordell_upper(a.n, a.gamma)}};
      env.meta.tolerances = {{"gamma_upper", "double"}};
    } else if (*tfix) {
      env.command = "theta fixpoint";
      const auto fp = thetaflow::fixpoint();
      env.outputs = {{"xi", fp.xi}, {"derivative", fp.derivative}, {"omega_xi_minus_xi", thetaflow::omega(fp.xi) - fp.xi}};
      env.meta.tolerances = {{"xi", 1e-15}, {"derivative", 1e-15}};
    } else if (*ttable) {
      env.command = "theta table";
      env.inputs = {{"max_n", a.max_n}, {"all", a.all_rows}};
      const auto trace = thetaflow::iterate_d(a.max_n);
      std::vector<const thetaflow::FlowRow*> rows;
      for (const auto& r : trace.rows) {
        const bool pow2 = (r.n & (r.n - 1)) == 0;
        if (a.all_rows || pow2 || r.n == a.max_n) rows.push_back(&r);
      }
      if (a.csv) {
        out << "n,d_n,omega_n,scaled_diff,A_n\n";
        for (const auto* r : rows) {
          out << r->n << ',' << fmt(r->d, 8) << ',' << fmt(r->omega, 8) << ',' << fmt(r->scaled_diff, 7) << ','
              << r->a << '\n';
        }
        csv_written = true;
      } else {
        Json arr = Json::array();
        for (const auto* r : rows) {
          arr.push_back({{"n", r->n}, {"d", r->d}, {"omega", r->omega}, {"scaled_diff", r->scaled_diff}, {"A", r->a}});
        }
        env.outputs = {{"rows", arr}, {"xi", trace.xi}, {"xi_derivative", trace.xi_derivative}};
        env.meta.tolerances = {{"d", "4 ulp relative per step"}, {"omega", "4 ulp relative per step"}};
      }
    } else if (*tfit) {
      env.command = "theta fit";
      const auto ladder = parse_int_list(a.ladder);
      env.inputs = {{"ladder", ladder}};
      if (ladder.size() != 4) throw std::invalid_argument("--ladder: need exactly four dimensions");
      for (int n : ladder) {
        if (n < 1 || n > 100000) throw std::invalid_argument("--ladder: dimensions must lie in [1, 100000]");
      }
      const auto trace = thetaflow::iterate_d(*std::max_element(ladder.begin(), ladder.end()));
      const auto f = thetaflow::asymptotic_fit(trace, ladder);
      env.outputs = {{"c0", f.c0}, {"c1", f.c1}, {"c2", f.c2}, {"c3", f.c3}, {"xi", trace.xi}};
      env.meta.tolerances = {{"c0", "fit"}, {"c1", "fit"}};
    } else if (*approx_cmd) {
      env.command = "approx";
      env.inputs = {{"gram", a.gram_file}, {"kappa", a.kappa}, {"verify", a.verify}};
      const auto target = approx::load_gram_file(a.gram_file);
      const auto r = approx::approximate(target, a.kappa);
      env.outputs = {{"s", report::svector_to_json(r.s)},
                     {"v", report::big_vector_to_json(r.v)},
                     {"l_tilde", matrix_json(r.l_tilde)},
                     {"b", matrix_json(r.b)},
                     {"gram_error", r.gram_error}};
      if (a.verify) {
        const auto rep = approx::verify_approximation(target, r, enum_opts);
        Json v = {{"gram_error", rep.gram_error},
                  {"kernel_ok", rep.kernel_ok},
                  {"rounding_ok", rep.rounding_ok},
                  {"saturated", rep.saturated},
                  {"target_density", rep.target_density}};
        v["lattice_density"] = rep.lattice_density ? Json(*rep.lattice_density) : Json(nullptr);
        v["lattice_minimum"] = rep.lattice_minimum ? report::big_to_json(*rep.lattice_minimum) : Json(nullptr);
        env.outputs["verification"] = v;
      }
      env.meta.tolerances = {{"s", "exact"}, {"gram_error", "double"}};
    } else if (*vpaper) {
      env.command = "verify paper";
      const auto only = a.only.empty() ? std::vector<int>{} : parse_int_list(a.only);
      env.inputs = {{"only", only}};
      const auto results = acceptance::run(only);
      bool all = true;
      for (const auto& r : results) all = all && r.pass();
      env.outputs = {{"criteria", acceptance::to_json(results)}, {"all_pass", all}};
      env.meta.extra = {{"criteria", acceptance::timings_json(results)}};
      env.meta.tolerances = {{"criteria", "as stated per criterion"}};
      if (!all) code = kVerificationFailed;
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (csv_written) return code;
  env.meta.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report::emit(env) << '\n';
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace latpack::cli
