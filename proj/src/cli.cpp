#include "scott/cli.hpp"

#include "parallel.hpp"
#include "scott/atomic_energy.hpp"
#include "scott/errors.hpp"
#include "scott/scott_shift.hpp"
#include "scott/thomas_fermi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace scott {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultTfTolerance = 1e-8;

struct CliConfig {
  std::optional<double> tol;
  double alpha = PhysicalConstants{}.alpha;
  bool json = false;
  std::string out_path;
  unsigned threads = 1;
};

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// A table of named columns; cells may be absent.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> integer_columns;

  bool is_integer(const std::string &c) const {
    return std::find(integer_columns.begin(), integer_columns.end(), c) !=
           integer_columns.end();
  }

  std::string csv() const {
    std::string s;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      s += (c ? "," : "") + columns[c];
    }
    s += '\n';
    for (const auto &row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) {
          s += ',';
        }
        if (row[c]) {
          s += is_integer(columns[c])
                   ? std::to_string(static_cast<long long>(*row[c]))
                   : fmt12(*row[c]);
        }
      }
      s += '\n';
    }
    return s;
  }

  json row_json(const std::vector<std::optional<double>> &row) const {
    json obj = json::object();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!row[c]) {
        obj[columns[c]] = nullptr;
      } else if (is_integer(columns[c])) {
        obj[columns[c]] = static_cast<long long>(*row[c]);
      } else {
        obj[columns[c]] = *row[c];
      }
    }
    return obj;
  }

  std::string json_text(bool single) const {
    json doc;
    if (single && rows.size() == 1) {
      doc = row_json(rows.front());
    } else {
      doc = json::array();
      for (const auto &row : rows) {
        doc.push_back(row_json(row));
      }
    }
    return doc.dump(2) + "\n";
  }
};

void emit(const CliConfig &cfg, const Table &table, bool single,
          std::ostream &out) {
  const std::string text = cfg.json ? table.json_text(single) : table.csv();
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file " + cfg.out_path);
  }
  file << text;
  if (!file) {
    throw std::runtime_error("failed writing " + cfg.out_path);
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double shift_tol(const CliConfig &cfg, Coupling g) {
  return cfg.tol.value_or(default_shift_tolerance(g));
}

TfSolution solve_tf_for(const CliConfig &cfg) {
  return solve_tf(cfg.tol.value_or(kDefaultTfTolerance));
}

void cmd_shift(const CliConfig &cfg, double gamma, std::ostream &out) {
  const Coupling g(gamma);
  ShiftOptions opts;
  opts.threads = cfg.threads;
  const ShiftResult r = shift(g, shift_tol(cfg, g), opts);
  Table t;
  t.columns = {"gamma", "s_d", "scott_q", "schwinger_q", "tail_estimate"};
  t.rows.push_back({gamma, r.value, 0.5 + r.value,
                    0.5 + schwinger_shift(gamma), r.tail_estimate});
  emit(cfg, t, true, out);
}

void cmd_curve(const CliConfig &cfg, double gmin, double gmax, int steps,
               std::ostream &out) {
  if (!(gmin >= 0.0 && gmin < gmax && gmax < 1.0)) {
    throw DomainError("curve: need 0 <= gamma-min < gamma-max < 1");
  }
  if (steps < 2) {
    throw DomainError("curve: need steps >= 2");
  }
  const auto n = static_cast<std::size_t>(steps);
  std::vector<double> s(n);
  std::vector<double> gammas(n);
  for (std::size_t i = 0; i < n; ++i) {
    gammas[i] = i + 1 == n ? gmax
                           : gmin + (gmax - gmin) * static_cast<double>(i) /
                                        static_cast<double>(n - 1);
  }
  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const Coupling g(gammas[i]);
    s[i] = shift(g, shift_tol(cfg, g)).value;
  });
  Table t;
  t.columns = {"gamma", "s_d", "q", "q_schwinger"};
  for (std::size_t i = 0; i < n; ++i) {
    t.rows.push_back(
        {gammas[i], s[i], 0.5 + s[i], 0.5 + schwinger_shift(gammas[i])});
  }
  emit(cfg, t, false, out);
}

void cmd_tf(const CliConfig &cfg, const std::string &profile,
            std::ostream &out) {
  const TfSolution sol = solve_tf_for(cfg);
  if (!profile.empty()) {
    std::ofstream file(profile, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open profile file " + profile);
    }
    write_profile_csv(file, sol);
  }
  Table t;
  t.columns = {"initial_slope", "e_tf_1"};
  t.rows.push_back({sol.initial_slope(), sol.e_tf_1()});
  emit(cfg, t, true, out);
}

void cmd_energy(const CliConfig &cfg, double Z, std::optional<double> gamma,
                std::ostream &out) {
  PhysicalConstants{cfg.alpha}.validate();
  const Coupling g(gamma.value_or(cfg.alpha * Z));
  const TfSolution sol = solve_tf_for(cfg);
  const double e_tf = tf_energy(Z, sol).value;
  const double q = scott_coefficient(g, shift_tol(cfg, g)).q;
  Table t;
  t.columns = {"Z", "gamma", "e_tf", "scott_q", "energy"};
  t.rows.push_back({Z, g.value(), e_tf, q, e_tf + q * Z * Z});
  emit(cfg, t, true, out);
}

void cmd_compare(const CliConfig &cfg, const std::string &nist_path,
                 const std::string &ref_path, std::ostream &out) {
  const PhysicalConstants constants{cfg.alpha};
  constants.validate();
  auto load = [](const std::string &path, std::string_view column) {
    const std::string text = read_file(path);
    try {
      return ingest_energy_table(text, column);
    } catch (const ParseError &e) {
      throw std::runtime_error(path + ": " + e.what());
    }
  };
  const auto records = load(nist_path, "E_total_Ha");
  std::optional<std::vector<NistRecord>> reference;
  if (!ref_path.empty()) {
    reference = load(ref_path, "E_ref_Ha");
  }
  const TfSolution sol = solve_tf_for(cfg);
  const auto rows =
      comparison_table(records, reference, constants, sol, cfg.tol,
                       cfg.threads);
  Table t;
  t.columns = {"Z",           "gamma",       "empirical_q",
               "model_q",     "schwinger_q", "reference_q"};
  t.integer_columns = {"Z"};
  for (const auto &r : rows) {
    t.rows.push_back({static_cast<double>(r.Z), r.gamma, r.empirical_q,
                      r.model_q, r.schwinger_q, r.reference_q});
  }
  emit(cfg, t, false, out);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Relativistic Scott correction and Thomas-Fermi tools", "scott"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  double tol = 0.0;
  auto *tol_opt = app.add_option("--tol", tol, "Target accuracy");
  app.add_option("--alpha", cfg.alpha, "Fine-structure constant")
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON instead of CSV");
  app.add_option("--out", cfg.out_path, "Write results to PATH");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  double gamma = 0.0;
  auto *shift_cmd = app.add_subcommand("shift", "Spectral shift s^D(gamma)");
  shift_cmd->add_option("--gamma", gamma, "Coupling Z/c")->required();

  double gmin = 0.0;
  double gmax = 0.0;
  int steps = 0;
  auto *curve_cmd =
      app.add_subcommand("curve", "Scott coefficient on a gamma grid");
  curve_cmd->add_option("--gamma-min", gmin)->required();
  curve_cmd->add_option("--gamma-max", gmax)->required();
  curve_cmd->add_option("--steps", steps)->required();

  std::string profile;
  auto *tf_cmd = app.add_subcommand("tf", "Thomas-Fermi profile and energy");
  tf_cmd->add_option("--profile", profile, "Write the x,phi table to PATH");

  double Z = 0.0;
  double energy_gamma = 0.0;
  auto *energy_cmd = app.add_subcommand("energy", "Predicted ground state");
  energy_cmd->add_option("--Z", Z, "Nuclear charge")->required();
  auto *energy_gamma_opt = energy_cmd->add_option(
      "--gamma", energy_gamma, "Coupling (default alpha*Z)");

  std::string nist_path;
  std::string ref_path;
  auto *compare_cmd =
      app.add_subcommand("compare", "Empirical vs model Scott coefficients");
  compare_cmd->add_option("--nist", nist_path, "CSV Z,E_total_Ha")
      ->required();
  compare_cmd->add_option("--ref", ref_path, "CSV Z,E_ref_Ha");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }
  if (*tol_opt) {
    cfg.tol = tol;
  }

  try {
    if (*shift_cmd) {
      cmd_shift(cfg, gamma, out);
    } else if (*curve_cmd) {
      cmd_curve(cfg, gmin, gmax, steps, out);
    } else if (*tf_cmd) {
      cmd_tf(cfg, profile, out);
    } else if (*energy_cmd) {
      cmd_energy(cfg, Z,
                 *energy_gamma_opt ? std::optional<double>(energy_gamma)
                                   : std::nullopt,
                 out);
    } else if (*compare_cmd) {
      cmd_compare(cfg, nist_path, ref_path, out);
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace scott
