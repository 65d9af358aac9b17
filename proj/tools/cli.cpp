#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "bjq/algebra/crehan.hpp"
#include "bjq/algebra/format.hpp"
#include "bjq/algebra/quantize.hpp"
#include "bjq/distributions.hpp"
#include "bjq/errors.hpp"
#include "bjq/io.hpp"
#include "bjq/metaplectic.hpp"
#include "bjq/signals.hpp"
#include "bjq/uncertainty.hpp"

namespace bjq::cli {

namespace {

using nlohmann::json;

std::ostream* g_warn_stream = &std::cerr;
void warn_to_stream(const std::string& msg) { *g_warn_stream << "warning: " << msg << '\n'; }

struct Options {
  int n_points = 256;
  double half_length = 10.0;
  double hbar = 1.0;
  int quad_nodes = kDefaultQuadNodes;
  std::string out;
  std::string format = "csv";
  double tolerance = 1e-6;

  // subcommand arguments
  std::string signal = "gaussian:0,0,1";
  std::string signal2;
  double tau = 0.5;
  std::string method = "filter";
  std::string apply_method = "kernel";
  std::string scheme = "weyl";
  std::string monomial = "1,1";
  int m = 2, n = 2;
  int level = 0;
  std::string lambda = "1", alpha = "0";
  bool exact = false;
  std::string symbol = "gaussian";
  std::string generator = "j";
  std::string state = "gaussian:0,0,1";
  double ghost_p0 = 3.0, ghost_sigma = 1.0;
};

double env_hbar() {
  const char* raw = std::getenv("BJQ_DEFAULT_HBAR");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("BJQ_DEFAULT_HBAR must be a positive number, got '") + raw + "'");
  }
  return v;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), pg_(make_phase_grid(o.n_points, o.half_length, o.hbar)) {
    if (o.quad_nodes < 1) throw ValidationError("--quad-nodes must be at least 1");
    if (!(o.tolerance > 0.0)) throw ValidationError("--tolerance must be positive");
    if (o.format != "csv" && o.format != "json" && o.format != "pgm") {
      throw ValidationError("--format must be csv, json or pgm");
    }
  }

  int dispatch(const std::string& cmd) {
    if (cmd == "wigner") return emit_phase(cross_wigner(first(), second(), pg_));
    if (cmd == "tau-wigner") return emit_phase(cross_wigner_tau(first(), second(), o_.tau, pg_));
    if (cmd == "bjw") return bjw();
    if (cmd == "rihaczek") return emit_phase(rihaczek(first(), second(), pg_));
    if (cmd == "ambiguity") return emit_phase(ambiguity(first(), second(), pg_));
    if (cmd == "quantize") return quantize_cmd();
    if (cmd == "commutator") return commutator_cmd();
    if (cmd == "crehan") return crehan_cmd();
    if (cmd == "apply-op") return apply_cmd();
    if (cmd == "pairing-check") return pairing_cmd();
    if (cmd == "covariance-test") return covariance_cmd();
    if (cmd == "uncertainty") return uncertainty_cmd();
    if (cmd == "ghost") return ghost_cmd();
    throw ValidationError("unknown subcommand: " + cmd);
  }

 private:
  const Options& o_;
  std::ostream& out_;
  PhaseGrid pg_;

  SampledSignal make_signal(const std::string& spec) const {
    return generate_signal(SignalSpec::parse(spec), pg_.x, pg_.hbar);
  }
  SampledSignal first() const { return make_signal(o_.signal); }
  SampledSignal second() const { return make_signal(o_.signal2.empty() ? o_.signal : o_.signal2); }

  QuadratureRule rule() const { return gauss_legendre(o_.quad_nodes); }

  SymbolSource make_symbol(const std::string& spec) const {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    if (kind == "gaussian") return gaussian_symbol(pg_.hbar, body.empty() ? 1.0 : std::stod(body));
    if (kind == "xp_gaussian") return xp_gaussian_symbol(pg_.hbar);
    if (kind == "monomial") {
      int a = 0, b = 0;
      char comma = 0;
      std::istringstream in(body);
      if (!(in >> a >> comma >> b) || comma != ',') throw ValidationError("monomial symbol needs M,N");
      return monomial_symbol(a, b);
    }
    if (kind == "csv") {
      PhaseFunction f = read_phase_csv(body);
      if (!same_grid(f.grid, pg_)) throw ValidationError("symbol file " + body + " is on a different grid");
      return SymbolSource::sampled(std::move(f), body);
    }
    throw ValidationError("unknown symbol: " + spec + " (gaussian[:w], xp_gaussian, monomial:M,N, csv:PATH)");
  }

  OperatorMatrix quantize_symbol(const SymbolSource& a, const std::string& scheme) const {
    if (scheme == "weyl") return kernel_weyl(a, pg_);
    if (scheme == "bj") return kernel_bj(a, pg_, rule());
    if (scheme.rfind("tau:", 0) == 0) return kernel_tau(a, algebra::parse_rational(scheme.substr(4)).get_d(), pg_);
    throw ValidationError("unknown scheme: " + scheme);
  }

  Scheme numeric_scheme() const {
    if (o_.scheme == "weyl") return Scheme::weyl;
    if (o_.scheme == "bj") return Scheme::born_jordan;
    throw ValidationError("this subcommand accepts --scheme weyl or bj");
  }

  void emit_json(const json& j) const {
    if (o_.out.empty()) {
      out_ << j.dump(2) << '\n';
    } else {
      write_json(j, o_.out);
    }
  }

  int emit_phase(const PhaseFunction& f) const {
    if (o_.format == "pgm") {
      if (o_.out.empty()) throw ValidationError("--format pgm needs --out");
      write_pgm(f, o_.out);
      return 0;
    }
    if (o_.format == "json") {
      json j{{"n_points", f.grid.n()}, {"x_min", f.grid.x.x_min}, {"dx", f.grid.x.dx}, {"p_min", f.grid.p.x_min},
             {"dp", f.grid.p.dx},    {"hbar", f.grid.hbar}};
      std::vector<double> re, im;
      for (const auto& v : f.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
      }
      j["re"] = re;
      j["im"] = im;
      emit_json(j);
      return 0;
    }
    if (o_.out.empty()) {
      out_ << "x,p,re,im\n";
      for (int i = 0; i < f.grid.n(); ++i)
        for (int k = 0; k < f.grid.n(); ++k)
          out_ << format_double(f.grid.x.point(i)) << ',' << format_double(f.grid.p.point(k)) << ','
               << format_double(f.at(i, k).real()) << ',' << format_double(f.at(i, k).imag()) << '\n';
    } else {
      write_csv(f, o_.out);
    }
    return 0;
  }

  int bjw() const {
    if (o_.method == "filter") return emit_phase(bjw_filtered(first(), second(), pg_));
    if (o_.method == "quadrature") return emit_phase(bjw_quadrature(first(), second(), pg_, rule()));
    throw ValidationError("--method must be filter or quadrature");
  }

  int quantize_cmd() const {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream in(o_.monomial);
    if (!(in >> a >> comma >> b) || comma != ',') throw ValidationError("--monomial expects M,N");
    const auto poly = algebra::quantize_monomial(a, b, algebra::QuantScheme::parse(o_.scheme));
    out_ << algebra::to_string(poly) << '\n';
    return 0;
  }

  int commutator_cmd() const {
    if (o_.m < 0 || o_.n < 0) throw ValidationError("--m and --n must be non-negative");
    using algebra::OpPoly;
    const OpPoly exact = algebra::commutator(OpPoly::monomial(o_.m, 0), OpPoly::monomial(0, o_.n));
    const OpPoly closed = algebra::commutator_closed_form_without_factorial(o_.m, o_.n);
    json j{{"m", o_.m},
           {"n", o_.n},
           {"commutator", algebra::to_string(exact)},
           {"closed_form_without_factorial", algebra::to_string(closed)},
           {"agree", exact == closed}};
    if (o_.out.empty() && o_.format != "json") {
      out_ << algebra::to_string(exact) << '\n';
      if (!(exact == closed)) out_ << "closed form without k! gives: " << algebra::to_string(closed) << '\n';
    } else {
      emit_json(j);
    }
    return 0;
  }

  int crehan_cmd() const {
    if (o_.exact) {
      std::ostringstream hb;
      hb.precision(17);
      hb << o_.hbar;
      const mpq_class lam = algebra::parse_rational(o_.lambda);
      const mpq_class alp = algebra::parse_rational(o_.alpha);
      const mpq_class hbar = algebra::parse_rational(hb.str());
      out_ << algebra::crehan_spectrum_exact(o_.level, lam, alp, hbar).get_str() << '\n';
    } else {
      const double lam = std::stod(o_.lambda);
      const double alp = std::stod(o_.alpha);
      out_ << format_double(algebra::crehan_spectrum(o_.level, lam, alp, o_.hbar)) << '\n';
    }
    return 0;
  }

  int apply_cmd() const {
    const SampledSignal psi = first();
    const SymbolSource a = make_symbol(o_.symbol);
    OperatorMatrix op;
    if (o_.apply_method == "kernel") {
      op = quantize_symbol(a, o_.scheme);
    } else if (o_.apply_method == "twist") {
      op = op_from_twist(a, pg_, numeric_scheme());
    } else {
      throw ValidationError("--method must be kernel or twist");
    }
    const SampledSignal out = apply(op, psi);
    if (o_.out.empty()) {
      out_ << "x,re,im\n";
      for (int j = 0; j < out.grid.n_points; ++j)
        out_ << format_double(out.grid.point(j)) << ',' << format_double(out.values[j].real()) << ','
             << format_double(out.values[j].imag()) << '\n';
    } else {
      write_csv(out, o_.out);
    }
    return 0;
  }

  int pairing_cmd() const {
    const SymbolSource a = make_symbol(o_.symbol);
    const SampledSignal psi = first();
    const SampledSignal phi = second();
    Pairing p;
    if (o_.scheme == "bj") {
      p = pairing_check_bj(a, psi, phi, pg_);
    } else if (o_.scheme == "weyl") {
      p = pairing_check(a, psi, phi, 0.5, pg_);
    } else if (o_.scheme.rfind("tau:", 0) == 0) {
      p = pairing_check(a, psi, phi, algebra::parse_rational(o_.scheme.substr(4)).get_d(), pg_);
    } else {
      throw ValidationError("unknown scheme: " + o_.scheme);
    }
    // Relative once the pairing is of order one, absolute below that; the
    // pairing of normalised signals against a bounded symbol can vanish exactly.
    const double err = std::abs(p.lhs - p.rhs) / std::max(std::abs(p.lhs), 1.0);
    emit_json({{"scheme", o_.scheme},
               {"symbol", o_.symbol},
               {"lhs", {p.lhs.real(), p.lhs.imag()}},
               {"rhs", {p.rhs.real(), p.rhs.imag()}},
               {"error", err},
               {"tolerance", o_.tolerance},
               {"passed", err <= o_.tolerance}});
    return 0;
  }

  int covariance_cmd() const {
    const MetaGenerator g = MetaGenerator::parse(o_.generator);
    const SymbolSource a = make_symbol(o_.symbol);
    const double defect = covariance_defect(numeric_scheme(), a, g, pg_);
    emit_json({{"scheme", o_.scheme},
               {"generator", o_.generator},
               {"symbol_id", o_.symbol},
               {"defect", defect},
               {"theta_invariance", theta_invariance(project(g), pg_)}});
    return 0;
  }

  MixedState make_state(const std::string& spec) const {
    if (spec.rfind("mix:", 0) != 0) return MixedState::pure(make_signal(spec));
    std::vector<double> weights;
    std::vector<SampledSignal> states;
    std::stringstream ss(spec.substr(4));
    std::string item;
    while (std::getline(ss, item, ';')) {
      const auto at = item.find('@');
      if (at == std::string::npos) throw ValidationError("mixture entries look like WEIGHT@SIGNAL");
      weights.push_back(std::stod(item.substr(0, at)));
      states.push_back(make_signal(item.substr(at + 1)));
    }
    return MixedState::orthonormalized(std::move(weights), std::move(states));
  }

  int uncertainty_cmd() const {
    const MixedState state = make_state(o_.state);
    const Observable x = make_observable(position_operator(pg_));
    const Observable p = make_observable(momentum_operator(pg_));
    const CovarianceReport r = rs_check(state, x, p);
    const Cov2 sigma = covariance_matrix(state, pg_);
    const RsMatrixResult mat = rs_matrix_check(sigma, pg_.hbar);
    emit_json({{"state", o_.state},
               {"var_x", r.var_a},
               {"var_p", r.var_b},
               {"cov", {r.cov.real(), r.cov.imag()}},
               {"cov_sym", r.cov_sym},
               {"commutator_expectation", {r.commutator_expectation.real(), r.commutator_expectation.imag()}},
               {"lhs", r.lhs},
               {"rhs", r.rhs},
               {"satisfied", r.satisfied},
               {"covariance_matrix", {{sigma.xx, sigma.xp}, {sigma.xp, sigma.pp}}},
               {"min_eigenvalue", mat.min_eigenvalue},
               {"matrix_check_passed", mat.passed}});
    return 0;
  }

  int ghost_cmd() const {
    SignalSpec spec;
    spec.kind = SignalSpec::Kind::two_tone;
    spec.p0 = o_.ghost_p0;
    spec.sigma = o_.ghost_sigma;
    const SampledSignal psi = generate_signal(spec, pg_.x, pg_.hbar);
    const InterferenceRegion region{-3.0, 3.0, -0.5, 0.5};
    const double w = interference_energy(cross_wigner(psi, psi, pg_), region);
    const double b = interference_energy(bjw_filtered(psi, psi, pg_), region);
    emit_json({{"signal", "two_tone"},
               {"p0", spec.p0},
               {"sigma", spec.sigma},
               {"region", {{"x", {region.x_lo, region.x_hi}}, {"p", {region.p_lo, region.p_hi}}}},
               {"wigner_energy", w},
               {"bjw_energy", b},
               {"ratio", b / w}});
    return 0;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  g_warn_stream = &err;
  set_warning_sink(&warn_to_stream);

  Options o;
  CLI::App app{"Born-Jordan / Weyl / tau quantization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file; command-line flags take precedence");

  try {
    o.hbar = env_hbar();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  app.add_option("--n-points", o.n_points, "grid size (even, >= 4)")->capture_default_str();
  app.add_option("--half-length", o.half_length, "grid spans [-L, L)")->capture_default_str();
  app.add_option("--hbar", o.hbar, "Planck constant (default from BJQ_DEFAULT_HBAR or 1)")->capture_default_str();
  app.add_option("--quad-nodes", o.quad_nodes, "Gauss-Legendre nodes for tau averages")->capture_default_str();
  app.add_option("--out", o.out, "output path (stdout when omitted)");
  app.add_option("--format", o.format, "csv, json or pgm")->capture_default_str();
  app.add_option("--tolerance", o.tolerance, "pass threshold for checks")->capture_default_str();

  auto add_signals = [&](CLI::App* sub) {
    sub->add_option("--signal", o.signal, "signal spec")->capture_default_str();
    sub->add_option("--signal2", o.signal2, "second signal (defaults to --signal)");
  };

  auto* wigner = app.add_subcommand("wigner", "cross-Wigner distribution");
  add_signals(wigner);
  auto* tw = app.add_subcommand("tau-wigner", "tau-Wigner distribution");
  add_signals(tw);
  tw->add_option("--tau", o.tau, "tau")->required();
  auto* bjw = app.add_subcommand("bjw", "Born-Jordan-Wigner distribution");
  add_signals(bjw);
  bjw->add_option("--method", o.method, "filter or quadrature")->capture_default_str();
  add_signals(app.add_subcommand("rihaczek", "Rihaczek-Kirkwood distribution"));
  add_signals(app.add_subcommand("ambiguity", "cross-ambiguity function"));

  auto* quant = app.add_subcommand("quantize", "exact quantization of x^M p^N");
  quant->add_option("--scheme", o.scheme, "weyl, bj or tau:R")->capture_default_str();
  quant->add_option("--monomial", o.monomial, "M,N")->required();

  auto* comm = app.add_subcommand("commutator", "[X^M, P^N] in normal order");
  comm->add_option("--m", o.m, "power of X")->capture_default_str();
  comm->add_option("--n", o.n, "power of P")->capture_default_str();

  auto* cre = app.add_subcommand("crehan", "Crehan spectrum E_N");
  cre->add_option("--N", o.level, "level")->required();
  cre->add_option("--lambda", o.lambda, "coupling")->capture_default_str();
  cre->add_option("--alpha", o.alpha, "ordering parameter")->capture_default_str();
  cre->add_flag("--exact", o.exact, "rational arithmetic");

  auto* ap = app.add_subcommand("apply-op", "apply Op(a) to a signal");
  add_signals(ap);
  ap->add_option("--symbol", o.symbol, "gaussian[:w], xp_gaussian, monomial:M,N, csv:PATH")->required();
  ap->add_option("--scheme", o.scheme, "weyl, bj or tau:R")->capture_default_str();
  ap->add_option("--method", o.apply_method, "kernel or twist (twist takes weyl or bj)")->capture_default_str();

  auto* pc = app.add_subcommand("pairing-check", "<Op(a) psi, phi> against <a, W(psi, phi)>");
  add_signals(pc);
  pc->add_option("--symbol", o.symbol, "symbol spec")->capture_default_str();
  pc->add_option("--scheme", o.scheme, "weyl, bj or tau:R")->capture_default_str();

  auto* ct = app.add_subcommand("covariance-test", "metaplectic covariance defect");
  ct->add_option("--scheme", o.scheme, "weyl or bj")->capture_default_str();
  ct->add_option("--generator", o.generator, "j, ml:L or vp:P")->capture_default_str();
  ct->add_option("--symbol", o.symbol, "symbol spec")->capture_default_str();

  auto* un = app.add_subcommand("uncertainty", "Robertson-Schrodinger report for X and P");
  un->add_option("--state", o.state, "signal spec or mix:W@SPEC;W@SPEC")->capture_default_str();

  auto* gh = app.add_subcommand("ghost", "interference energy, Wigner vs Born-Jordan-Wigner");
  gh->add_option("--p0", o.ghost_p0, "tone offset")->capture_default_str();
  gh->add_option("--sigma", o.ghost_sigma, "envelope width")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner runner(o, out);
    return runner.dispatch(app.get_subcommands().front()->get_name());
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed argument (" << e.what() << ")\n";
    return 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bjq::cli
