#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "diskwork/dimension.hpp"
#include "diskwork/extremal.hpp"
#include "diskwork/registry.hpp"
#include "diskwork/variance.hpp"
#include "json.hpp"

using namespace dw;
using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- output ----------------------------------------------------------------

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto* d = std::get_if<double>(&c)) return fmt_double(*d);
  return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json cell_json(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return *i;
  if (auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return fmt_double(*d);
  }
  return std::get<std::string>(c);
}

class Writer {
 public:
  Writer(const std::string& format, const std::string& path) : jsonl_(format == "jsonl") {
    if (format != "csv" && format != "jsonl") throw ConfigError("format must be csv or jsonl");
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file " + path);
    }
  }

  void write(const Table& t) {
    std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    if (jsonl_) {
      for (const auto& r : t.rows) {
        json j;
        for (std::size_t k = 0; k < t.columns.size(); ++k) j[t.columns[k]] = cell_json(r[k]);
        os << j.dump() << "\n";
      }
      return;
    }
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << csv_field(t.columns[k]);
    os << "\r\n";
    for (const auto& r : t.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_field(cell_text(r[k]));
      os << "\r\n";
    }
  }

 private:
  bool jsonl_;
  std::ofstream file_;
};

// two whitespace-separated columns taken from table columns x and y
void write_plot(const std::string& path, const Table& t, std::size_t x, std::size_t y) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open plot file " + path);
  os << "# " << t.columns[x] << " " << t.columns[y] << "\n";
  for (const auto& r : t.rows) os << cell_text(r[x]) << " " << cell_text(r[y]) << "\n";
}

// ---- parsing ------------------------------------------------------------

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: " + s);
  }
  if (used != s.size()) throw ConfigError("not a number: " + s);
  return v;
}

// "v1,v2,..." or "start:stop:step"
std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    std::vector<double> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) p.push_back(parse_number(tok));
    if (p.size() != 3 || p[2] <= 0.0 || p[1] < p[0]) throw ConfigError("range must be start:stop:step");
    const auto n = static_cast<long>(std::floor((p[1] - p[0]) / p[2] + 1e-9));
    for (long k = 0; k <= n; ++k) out.push_back(p[0] + static_cast<double>(k) * p[2]);
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
  }
  if (out.empty()) throw ConfigError("empty grid");
  return out;
}

std::vector<double> parse_ladder(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) throw ConfigError("ladder must be m_min:m_max");
  const double a = parse_number(s.substr(0, pos)), b = parse_number(s.substr(pos + 1));
  if (a != std::floor(a) || b != std::floor(b) || a < 1 || b < a) throw ConfigError("ladder must be m_min:m_max");
  return radii_ladder(static_cast<int>(a), static_cast<int>(b), 1e-5);
}

cplx parse_complex(const std::string& s) {
  const auto pos = s.find(',');
  if (pos == std::string::npos) return parse_number(s);
  return {parse_number(s.substr(0, pos)), parse_number(s.substr(pos + 1))};
}

// {"radii": [...], "weights": [...] (optional), "angular": N, "values": [[re, im], ...]}
Symbol symbol_from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open symbol file " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed symbol file: ") + e.what());
  }
  PolarGrid g;
  try {
    g.radii = j.at("radii").get<std::vector<double>>();
    const auto n = j.at("angular").get<std::size_t>();
    g.counts.assign(g.radii.size(), n);
    if (j.contains("weights")) {
      g.weights = j.at("weights").get<std::vector<double>>();
    } else {
      // midpoint cells in r against 2 r dr
      for (std::size_t i = 0; i < g.radii.size(); ++i) {
        const double lo = i == 0 ? 0.0 : 0.5 * (g.radii[i - 1] + g.radii[i]);
        const double hi = i + 1 == g.radii.size() ? 1.0 : 0.5 * (g.radii[i] + g.radii[i + 1]);
        g.weights.push_back(hi * hi - lo * lo);
      }
    }
    DiskField f;
    f.grid = g;
    for (const auto& v : j.at("values")) f.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    f.validate();
    return Symbol::field(std::move(f));
  } catch (const NumericError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed symbol file: ") + e.what());
  }
}

Symbol parse_symbol(const std::string& s) {
  const auto pos = s.find(':');
  const std::string head = s.substr(0, pos);
  const std::string arg = pos == std::string::npos ? "" : s.substr(pos + 1);
  if (head == "zero") return Symbol::constant(0.0);
  if (head == "mu0") return Symbol::mu0();
  if (head == "conj") return Symbol::conjugate();
  if (arg.empty()) throw ConfigError("unknown symbol " + s);
  if (head == "const") return Symbol::constant(parse_complex(arg));
  if (head == "radial") return Symbol::radial(parse_number(arg));
  if (head == "phase") return Symbol::phase_random(static_cast<unsigned>(parse_number(arg)));
  if (head == "file") return symbol_from_file(arg);
  throw ConfigError("unknown symbol " + s);
}

// closed form of P mu where one is known
std::optional<std::function<cplx(cplx)>> reference(const Symbol& mu, const std::string& text) {
  if (mu.kind() == Symbol::Kind::mu0) return std::function<cplx(cplx)>(mu0_projection);
  if (text == "conj") return std::function<cplx(cplx)>([](cplx) { return cplx(0.0); });
  if (mu.kind() == Symbol::Kind::constant) {
    const cplx c = mu(0.0);
    return std::function<cplx(cplx)>([c](cplx) { return c; });
  }
  if (mu.kind() == Symbol::Kind::radial) {
    const double p = parse_number(text.substr(text.find(':') + 1));
    return std::function<cplx(cplx)>([p](cplx) { return cplx(2.0 / (p + 2.0)); });
  }
  return std::nullopt;
}

struct Options {
  std::string symbol = "mu0";
  std::string a_grid = "0.1:0.9:0.1";
  std::string t_grid = "2";
  std::string tau_grid;
  std::string ladder = "4:17";
  long truncation = 2047;
  std::string format = "csv";
  unsigned seed = 0;
  std::string out;
  std::string plot;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "csv or jsonl")->capture_default_str();
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--plot-data", o.plot, "write a two-column plot file");
  app->add_option("--seed", o.seed, "seed for random corpora")->capture_default_str();
}

void add_symbol(CLI::App* app, Options& o) {
  app->add_option("--symbol", o.symbol, "zero|const:c|mu0|conj|radial:p|phase:seed|file:path")->capture_default_str();
  app->add_option("--truncation", o.truncation, "projection truncation J")->capture_default_str();
}

HoloFn symbol_projection(const Options& o) {
  if (o.truncation < 1) throw ConfigError("truncation must be positive");
  return projected(parse_symbol(o.symbol), o.truncation);
}

// ---- commands ------------------------------------------------------------

int run_verify(const Options& o, const std::string& suite, bool list) {
  const auto& reg = check_registry();
  Writer w(o.format, o.out);
  if (list) {
    Table t{{"suite", "check", "statement"}, {}};
    for (const auto& c : reg) t.rows.push_back({c.suite, c.id, c.statement});
    w.write(t);
    return 0;
  }
  bool known = suite.empty();
  for (const auto& s : check_suites()) known = known || s == suite;
  if (!known) throw ConfigError("unknown suite " + suite);
  Table summary{{"suite", "check", "status", "statement", "note"}, {}};
  std::vector<std::string> failed;
  for (const auto& c : reg) {
    if (!suite.empty() && c.suite != suite) continue;
    CheckResult r;
    try {
      r = c.run(CheckConfig{o.seed});
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = e.what();
    }
    summary.rows.push_back({c.suite, c.id, std::string(r.pass ? "PASS" : "FAIL"), c.statement, r.note});
    if (!r.pass) failed.push_back(c.suite + "/" + c.id + ": " + c.statement);
    if (!suite.empty()) {
      std::cerr << "[" << c.suite << "/" << c.id << "]\n";
      Writer(o.format, "").write(r.table);
    }
  }
  w.write(summary);
  for (const auto& f : failed) std::cerr << "violated: " << f << "\n";
  return failed.empty() ? 0 : 1;
}

int run_project(const Options& o, int points) {
  if (points < 1) throw ConfigError("points must be positive");
  const Symbol mu = parse_symbol(o.symbol);
  if (o.truncation < 1) throw ConfigError("truncation must be positive");
  const auto p = bergman_project(mu, o.truncation);
  const auto ref = reference(mu, o.symbol);
  Table t{{"index", "x", "y", "re", "im", "ref_re", "ref_im", "abs_error"}, {}};
  for (int k = 0; k < points; ++k) {
    const cplx z = std::polar(0.99 * (k + 1) / points, 2.0 * kPi * k / points);
    const cplx v = p.series(z);
    std::vector<Cell> r{static_cast<long long>(k), z.real(), z.imag(), v.real(), v.imag()};
    if (ref) {
      const cplx e = (*ref)(z);
      r.insert(r.end(), {e.real(), e.imag(), std::abs(v - e)});
    } else {
      r.insert(r.end(), {std::string(), std::string(), std::string()});
    }
    t.rows.push_back(std::move(r));
  }
  Writer(o.format, o.out).write(t);
  write_plot(o.plot, t, 1, 3);
  return 0;
}

int run_dimension(const Options& o, const std::string& kprime) {
  Table t{{"k_prime", "k", "t_k", "bound", "comparison", "gap", "F_at_root", "dF_dt"}, {}};
  for (double kp : parse_grid(kprime)) {
    const auto d = dim_bound(kp);
    t.rows.push_back({d.k_prime, d.k, d.t_k, d.t_k, d.comparison, d.asymptotic_gap, d.F_at_root, d.derivative_sign});
  }
  Writer(o.format, o.out).write(t);
  write_plot(o.plot, t, 0, 3);
  return 0;
}

int run_tail(const Options& o) {
  const HoloFn g = symbol_projection(o);
  const auto as = parse_grid(o.a_grid);
  const auto ladder = parse_ladder(o.ladder);
  const auto sweep = tail_sweep(g, as, ladder);
  Table t{{"a", "r", "I", "bound"}, {}};
  for (const auto& r : sweep.rows) {
    const double b = r.param < 1.0 ? 10.0 * std::pow(1.0 - r.param, -1.5) : kInf;
    t.rows.push_back({r.param, r.r, r.divergent ? kInf : r.value, b});
  }
  Writer(o.format, o.out).write(t);
  write_plot(o.plot, t, 1, 2);
  return 0;
}

int run_spectrum(const Options& o) {
  const HoloFn g = symbol_projection(o);
  const auto ladder = parse_ladder(o.ladder);
  Table t{{"t", "beta_hat", "fit_residual", "dropped", "envelope"}, {}};
  for (double tv : parse_grid(o.t_grid)) {
    const auto e = exp_type_spectrum(g, tv, ladder);
    const double a = std::abs(tv);
    const double env = a >= 2.0 ? std::min(a * a / 4.0, a - 1.0) : a * a / 4.0;
    t.rows.push_back({tv, e.beta_hat, e.fit_residual, static_cast<long long>(e.dropped), env});
  }
  Writer(o.format, o.out).write(t);
  write_plot(o.plot, t, 0, 1);
  return 0;
}

int run_atvar(const Options& o) {
  const HoloFn g = symbol_projection(o);
  const auto ladder = parse_ladder(o.ladder);
  const auto taus = o.tau_grid.empty() ? default_tau_grid() : parse_grid(o.tau_grid);
  Table t{{"avar", "atvar"}, {}};
  t.rows.push_back({avar_estimate(g, ladder), atvar_estimate(g, ladder, taus)});
  Writer(o.format, o.out).write(t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for operators and estimators on the unit disk"};
  app.require_subcommand(1);
  Options o;

  std::string suite;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run registered invariant checks");
  verify->add_option("--suite", suite, "restrict to one suite");
  verify->add_flag("--list", list, "print the check manifest");
  add_common(verify, o);

  int points = 8;
  auto* project = app.add_subcommand("project", "evaluate the Bergman projection of a symbol");
  add_symbol(project, o);
  project->add_option("--points", points, "number of evaluation points")->capture_default_str();
  add_common(project, o);

  std::string kprime = "0.1";
  auto* dimension = app.add_subcommand("dimension", "dimension bound for k-quasicircles");
  dimension->add_option("--kprime", kprime, "k' values (list or start:stop:step)")->capture_default_str();
  add_common(dimension, o);

  auto* tail = app.add_subcommand("tail", "tail integral sweep over a-grid and ladder");
  add_symbol(tail, o);
  tail->add_option("--a-grid", o.a_grid, "a values")->capture_default_str();
  tail->add_option("--ladder", o.ladder, "m_min:m_max, radii 1 - 2^-m")->capture_default_str();
  add_common(tail, o);

  auto* spectrum = app.add_subcommand("spectrum", "exponential type spectrum estimate");
  add_symbol(spectrum, o);
  spectrum->add_option("--t", o.t_grid, "t values")->capture_default_str();
  spectrum->add_option("--ladder", o.ladder, "m_min:m_max")->capture_default_str();
  add_common(spectrum, o);

  auto* atvar = app.add_subcommand("atvar", "asymptotic variance and tail variance estimates");
  add_symbol(atvar, o);
  atvar->add_option("--tau-grid", o.tau_grid, "tau values (default 0.25:4:0.05)");
  atvar->add_option("--ladder", o.ladder, "m_min:m_max")->capture_default_str();
  add_common(atvar, o);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return run_verify(o, suite, list);
    if (*project) return run_project(o, points);
    if (*dimension) return run_dimension(o, kprime);
    if (*tail) return run_tail(o);
    if (*spectrum) return run_spectrum(o);
    if (*atvar) return run_atvar(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
