#include "alphacalc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alphacalc/calculus.hpp"
#include "alphacalc/errors.hpp"
#include "alphacalc/expr.hpp"
#include "alphacalc/geometry.hpp"
#include "alphacalc/json_io.hpp"
#include "alphacalc/ode.hpp"
#include "alphacalc/special.hpp"

namespace alphacalc {

namespace {

enum class Format { kText, kJson, kCsv };

struct Options {
  std::string alpha = "1";
  std::string order = "10";
  std::string format = "text";
  std::string expr;
  std::string file;
  std::string kind;
  long iterations = 1;
  std::optional<std::string> at;
  std::optional<std::string> grid;
  bool series = false;
  bool cojoint = false;
  std::string d;
  std::string omega;
  std::string c0;
  std::string c1;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw InputError("unknown format '" + s + "' (expected text, json or csv)");
}

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError(std::string("invalid number for ") + what + ": '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const char* what) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError(std::string("invalid integer for ") + what + ": '" + s + "'");
  return v;
}

Rat parse_rat_option(const std::string& s, const char* what) {
  if (s.empty()) throw InputError(std::string("missing value for ") + what);
  return Rat::parse(s);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out) : opts_(opts), out_(out), format_(parse_format(opts.format)) {}

  void deriv() { emit(alpha_deriv(input_series(), alpha())); }

  void nderiv() {
    if (opts_.iterations < 0) throw InputError("-l must be nonnegative");
    emit(alpha_deriv_iter(input_series(), alpha(), opts_.iterations));
  }

  void integ() { emit(alpha_integral(input_series(), alpha())); }

  void eval() {
    const PuiseuxSeries f = input_series();
    if (opts_.at.has_value() == opts_.grid.has_value()) throw InputError("eval needs exactly one of --at or --grid");
    if (opts_.at) {
      const double z = parse_double(*opts_.at, "--at");
      emit_value(z, alphacalc::eval(f, EvalPoint(z)));
      return;
    }
    const auto zs = parse_grid(*opts_.grid);
    const auto values = eval_grid(f, zs);
    if (format_ == Format::kJson) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < zs.size(); ++i) rows.push_back(Json{{"z", zs[i]}, {"value", values[i]}});
      out_ << dump(rows);
    } else {
      out_ << format_grid_csv(zs, values);
    }
  }

  void special() {
    const AlphaBasis a = alpha();
    if (opts_.series == opts_.at.has_value()) throw InputError("special needs exactly one of --series or --at");
    if (opts_.kind != "exp" && opts_.kind != "cos" && opts_.kind != "sin") {
      throw InputError("unknown special function '" + opts_.kind + "' (expected exp, cos or sin)");
    }
    if (opts_.at) {
      const EvalPoint z(parse_double(*opts_.at, "--at"));
      const double v = opts_.kind == "exp" ? e_alpha_eval(a, z) : trig_alpha_eval(trig_kind(), a, z);
      emit_value(z.value(), v);
      return;
    }
    const long trunc = truncation_index(a.n());
    if (opts_.kind == "exp") {
      emit(e_alpha_series(a, trunc));
      return;
    }
    const RealSeries s = trig_alpha_series(trig_kind(), a, trunc);
    switch (format_) {
      case Format::kText: out_ << format_text(s) << '\n'; break;
      case Format::kJson: out_ << dump(real_series_to_json(s)); break;
      case Format::kCsv: out_ << format_csv(s); break;
    }
  }

  void solve() {
    const OdeRequest req = ode_request_from_json(read_json_file(opts_.file));
    const PuiseuxSeries sol = indicial_residual_recurrence(req.spec, req.init, req.truncation_index);
    if (!opts_.cojoint) {
      emit(sol);
      return;
    }
    const CojointSpec cj = cojoint_map(req.spec);
    const long n = req.spec.alpha().n();
    const long count = sol.truncation_over(n);
    const std::vector<Rat> taylor = solve_cojoint(cj, req.init.values, count);
    const auto alpha_terms = sol.terms_over(n);
    const long checked = std::min<long>(count, static_cast<long>(taylor.size()));
    std::optional<long> mismatch;
    for (long k = 0; k < checked && !mismatch; ++k) {
      const auto it = alpha_terms.find(k);
      const Rat c = it == alpha_terms.end() ? Rat(0) : it->second;
      if (!(c == taylor[static_cast<std::size_t>(k)])) mismatch = k;
    }

    if (format_ == Format::kJson) {
      Json coeffs = Json::array();
      for (const auto& c : cj.coeffs) coeffs.push_back(rat_to_json(c));
      Json report{{"checked", checked}, {"agree", !mismatch}};
      report["first_mismatch"] = mismatch ? Json(*mismatch) : Json(nullptr);
      out_ << dump(Json{{"solution", series_to_json(sol)},
                        {"cojoint", Json{{"coeffs", std::move(coeffs)},
                                         {"forcing", cj.forcing ? series_to_json(*cj.forcing) : Json(nullptr)}}},
                        {"match", std::move(report)}});
      return;
    }
    if (format_ == Format::kCsv) throw InputError("--cojoint supports text and json output only");
    out_ << "solution: " << format_text(sol) << '\n';
    out_ << "cojoint coeffs:";
    for (const auto& c : cj.coeffs) out_ << ' ' << c.str();
    out_ << '\n';
    out_ << "cojoint forcing: " << (cj.forcing ? format_text(*cj.forcing, "x") : std::string("0")) << '\n';
    if (mismatch) {
      out_ << "match: coefficients differ at index " << *mismatch << '\n';
    } else {
      out_ << "match: " << checked << " of " << checked << " coefficients agree\n";
    }
  }

  void solve2() {
    const AlphaBasis a = alpha();
    const SecondOrderParams params(parse_rat_option(opts_.d, "--d"), parse_rat_option(opts_.omega, "--omega"));
    emit(solve_second_order(params, a, parse_rat_option(opts_.c0, "--c0"), parse_rat_option(opts_.c1, "--c1"),
                            truncation_index(a.n())));
  }

  void geom() {
    if (opts_.kind != "riemann" && opts_.kind != "torsion" && opts_.kind != "autoparallel") {
      throw InputError("unknown geometry operation '" + opts_.kind + "' (expected riemann, torsion or autoparallel)");
    }
    if (format_ == Format::kCsv) throw InputError("geom supports text and json output only");
    const GeometryInput in = geometry_from_json(read_json_file(opts_.file));
    if (opts_.kind == "riemann") {
      const RiemannComponents r = riemann(in.gamma, in.alpha);
      if (format_ == Format::kJson) {
        out_ << dump(riemann_to_json(r));
        return;
      }
      const std::size_t dim = r.dimension();
      bool any = false;
      for (std::size_t l = 0; l < dim; ++l) {
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
              const MultiSeries& s = r.at(l, k, i, j);
              if (s.is_zero()) continue;
              any = true;
              out_ << "R[" << l + 1 << ',' << k + 1 << ',' << i + 1 << ',' << j + 1 << "] = " << format_text(s) << '\n';
            }
          }
        }
      }
      if (!any) out_ << "0\n";
    } else if (opts_.kind == "torsion") {
      const TorsionComponents t = torsion(in.gamma);
      if (format_ == Format::kJson) {
        out_ << dump(torsion_to_json(t));
        return;
      }
      const std::size_t dim = t.dimension();
      bool any = false;
      for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < dim; ++j) {
          for (std::size_t i = 0; i < dim; ++i) {
            const MultiSeries& s = t.at(k, j, i);
            if (s.is_zero()) continue;
            any = true;
            out_ << "T[" << k + 1 << ',' << j + 1 << ',' << i + 1 << "] = " << format_text(s) << '\n';
          }
        }
      }
      if (!any) out_ << "0\n";
    } else {
      if (!in.curve) throw InputError("autoparallel needs a 'curve' entry");
      const auto res = autoparallel_residual(in.gamma, *in.curve, in.alpha);
      if (format_ == Format::kJson) {
        Json arr = Json::array();
        for (const auto& r : res) arr.push_back(series_to_json(r));
        out_ << dump(Json{{"residuals", std::move(arr)}});
        return;
      }
      for (std::size_t i = 0; i < res.size(); ++i) out_ << "residual[" << i + 1 << "] = " << format_text(res[i]) << '\n';
    }
  }

 private:
  AlphaBasis alpha() const { return AlphaBasis::parse(opts_.alpha); }

  Rat order() const { return parse_rat_option(opts_.order, "--order"); }

  long truncation_index(long n) const {
    const Rat k = order() * Rat(n);
    if (!k.is_integer()) throw InputError("--order " + opts_.order + " is not a multiple of 1/" + std::to_string(n));
    return to_index(k);
  }

  TrigKind trig_kind() const { return opts_.kind == "cos" ? TrigKind::kCos : TrigKind::kSin; }

  PuiseuxSeries input_series() const { return to_series(parse_expression(opts_.expr), order()); }

  std::vector<double> parse_grid(const std::string& spec) const {
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
    if (second == std::string::npos) throw InputError("--grid expects start:stop:steps");
    return linear_grid(parse_double(spec.substr(0, first), "--grid start"),
                       parse_double(spec.substr(first + 1, second - first - 1), "--grid stop"),
                       parse_long(spec.substr(second + 1), "--grid steps"));
  }

  void emit(const PuiseuxSeries& f) {
    switch (format_) {
      case Format::kText: out_ << format_text(f) << '\n'; break;
      case Format::kJson: out_ << dump(series_to_json(f)); break;
      case Format::kCsv: out_ << format_csv(f); break;
    }
  }

  void emit_value(double z, double v) {
    switch (format_) {
      case Format::kText: out_ << format_double(v) << '\n'; break;
      case Format::kJson: out_ << dump(Json{{"z", z}, {"value", v}}); break;
      case Format::kCsv: out_ << format_grid_csv(std::span(&z, 1), std::span(&v, 1)); break;
    }
  }

  const Options& opts_;
  std::ostream& out_;
  Format format_;
};

void add_common(CLI::App* sub, Options& o, bool with_order) {
  sub->add_option("--alpha", o.alpha, "alpha as m/n (default 1)");
  if (with_order) sub->add_option("--order", o.order, "truncation order as a rational (default 10)");
  sub->add_option("--format", o.format, "text, json or csv (default text)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact alpha-calculus on truncated Puiseux series", "alphacalc"};
  app.require_subcommand(1);

  auto* deriv = app.add_subcommand("deriv", "alpha-derivative of a series expression");
  add_common(deriv, o, true);
  deriv->add_option("expr", o.expr, "series expression")->required();

  auto* nderiv = app.add_subcommand("nderiv", "iterated alpha-derivative");
  add_common(nderiv, o, true);
  nderiv->add_option("-l", o.iterations, "number of derivatives")->required();
  nderiv->add_option("expr", o.expr, "series expression")->required();

  auto* integ = app.add_subcommand("integ", "alpha-integral of a series expression");
  add_common(integ, o, true);
  integ->add_option("expr", o.expr, "series expression")->required();

  auto* solve = app.add_subcommand("solve", "solve a linear alpha-ODE given as JSON");
  solve->add_option("--format", o.format, "text, json or csv (default text)");
  solve->add_flag("--cojoint", o.cojoint, "also print the co-joint ordinary equation and the coefficient match");
  solve->add_option("file", o.file, "ODE specification")->required();

  auto* solve2 = app.add_subcommand("solve2", "damped alpha-oscillator series");
  add_common(solve2, o, true);
  solve2->add_option("--d", o.d, "damping d")->required();
  solve2->add_option("--omega", o.omega, "frequency omega")->required();
  solve2->add_option("--c0", o.c0, "coefficient c0")->required();
  solve2->add_option("--c1", o.c1, "coefficient c1")->required();

  auto* special = app.add_subcommand("special", "alpha-exponential and alpha-trigonometric functions");
  add_common(special, o, true);
  special->add_option("kind", o.kind, "exp, cos or sin")->required();
  special->add_flag("--series", o.series, "print the series");
  special->add_option("--at", o.at, "evaluate the closed form at z > 0");

  auto* geom = app.add_subcommand("geom", "alpha-geometry of a connection given as JSON");
  geom->add_option("--format", o.format, "text or json (default text)");
  geom->add_option("kind", o.kind, "riemann, torsion or autoparallel")->required();
  geom->add_option("file", o.file, "geometry input")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a series expression");
  add_common(eval, o, true);
  eval->add_option("expr", o.expr, "series expression")->required();
  eval->add_option("--at", o.at, "evaluation point z > 0");
  eval->add_option("--grid", o.grid, "start:stop:steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::ostringstream doc;
  try {
    Runner run(o, doc);
    if (deriv->parsed()) run.deriv();
    else if (nderiv->parsed()) run.nderiv();
    else if (integ->parsed()) run.integ();
    else if (solve->parsed()) run.solve();
    else if (solve2->parsed()) run.solve2();
    else if (special->parsed()) run.special();
    else if (geom->parsed()) run.geom();
    else if (eval->parsed()) run.eval();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return 2;
  }
  out << doc.str();
  return 0;
}

}  // namespace alphacalc
