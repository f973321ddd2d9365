#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "harness.hpp"
#include "options.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/lfun.hpp"
#include "qeuler/padicl.hpp"
#include "render.hpp"

using namespace qeuler;
using namespace qeuler::tools;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string kind;
  std::string ring = "exact";
  std::string format = "json";
  std::string n_range = "0..6";
  std::string x = "0";
  std::string q = "1/2";
  long alpha = 1;
  std::string w;  // empty: 1 for table/eval, the whole grid for verify
  std::string chi = "1,0";
  long p = 0;
  long prec = 0;
  long level = 0;
  double s_re = 0.0;
  double s_im = 0.0;
  std::string s;
  long a = 1;
  long F = 0;
  double eps = 1e-12;
  long max_terms = 2000;
  bool series = false;
  std::string grid = "default";
  std::uint64_t seed = 0;
  long sample = 0;
  unsigned threads = 0;
};

std::string twist_text(const RunConfig& cfg) { return cfg.w.empty() ? "1" : cfg.w; }

// One output row: an index and a rendered value (JSON form and text form).
struct Row {
  long n;
  json value;
  std::string text;
};

void emit_rows(const RunConfig& cfg, const json& header, const std::vector<Row>& rows) {
  if (cfg.format == "json") {
    json out = header;
    out["rows"] = json::array();
    for (const auto& r : rows) out["rows"].push_back({{"n", r.n}, {"value", r.value}});
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "n,value\n";
    for (const auto& r : rows) std::cout << r.n << ",\"" << r.text << "\"\n";
  } else {
    for (const auto& r : rows) std::cout << "n=" << r.n << "  " << r.text << "\n";
  }
}

CharTable<Rational> rational_table(const DirichletCharacter& chi) {
  const CharTable<CycloExact> exact = exact_table(chi);
  CharTable<Rational> out{exact.modulus, {}, exact.nonzero};
  for (const auto& v : exact.values) {
    if (!v.is_rational()) throw ConfigError("--ring exact needs a real character; use --ring cyclotomic");
    out.values.push_back(v.rational_value());
  }
  return out;
}

LfunParams make_lfun_params(const RunConfig& cfg) {
  LfunParams lp;
  lp.alpha = cfg.alpha;
  lp.q = parse_rational_option("q", cfg.q);
  lp.w = parse_twist(twist_text(cfg)).exact();
  lp.chi = parse_character(cfg.chi);
  lp.eps = cfg.eps;
  lp.max_terms = cfg.max_terms;
  lp.validate();
  return lp;
}

// Rows of one table kind over an exact, cyclotomic or p-adic ring.
template <CoefficientRing T>
std::vector<Row> exact_rows(const RunConfig& cfg, const EulerParams<T>& params, const CharTable<T>& chi) {
  const auto [lo, hi] = parse_range(cfg.n_range);
  const Rational x = parse_rational_option("x", cfg.x);
  const T one = ring_one(params.q());
  const CharTable<T> unit = unit_table(one);
  std::vector<Row> rows;
  for (long n = std::max(lo, 0L); n <= hi; ++n) {
    T value = one;
    if (cfg.kind == "euler") {
      value = euler_polynomial(n, x, params);
    } else if (cfg.kind == "gen-euler") {
      value = twisted_gen_euler_poly(n, x, chi, params);
    } else if (cfg.kind == "zeta") {
      if (x <= 0) throw ConfigError("zeta needs --x > 0");
      value = sum_terms(continuation_terms(n, q_power(params.q(), Rational(x * params.alpha())), unit, params), one);
    } else {  // l
      if (x == 0) {
        value = l_function_exact(n, chi, params);
      } else {
        value = sum_terms(continuation_terms(n, q_power(params.q(), Rational(x * params.alpha())), chi, params), one);
      }
    }
    rows.push_back({n, encode(value), render(value)});
  }
  return rows;
}

std::vector<Row> complex_rows(const RunConfig& cfg) {
  const auto [lo, hi] = parse_range(cfg.n_range);
  const Rational x = parse_rational_option("x", cfg.x);
  const LfunParams lp = make_lfun_params(cfg);
  const EulerParams<ComplexF> params(cfg.alpha, ComplexF(lp.q.get_d(), 0.0), lp.w.embed_complex());
  const CharTable<ComplexF> chi = complex_table(lp.chi);
  std::vector<Row> rows;
  for (long n = std::max(lo, 0L); n <= hi; ++n) {
    const ComplexF s(-static_cast<double>(n), 0.0);
    ComplexF value;
    if (cfg.kind == "euler") value = euler_polynomial(n, x, params);
    else if (cfg.kind == "gen-euler") value = twisted_gen_euler_poly(n, x, chi, params);
    else if (cfg.kind == "zeta") value = hurwitz_zeta(s, x, lp).value;
    else value = x == 0 ? l_function(s, lp).value : dirichlet_l(x, s, lp).value;
    rows.push_back({n, encode(value), render(value)});
  }
  return rows;
}

int cmd_table(const RunConfig& cfg) {
  static const std::vector<std::string> kinds{"euler", "gen-euler", "zeta", "l"};
  if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end()) {
    throw ConfigError("table: kind must be euler, gen-euler, zeta or l");
  }
  const Rational q = parse_rational_option("q", cfg.q);
  const TwistSpec w = parse_twist(twist_text(cfg), cfg.p);
  const DirichletCharacter chi = parse_character(cfg.chi);
  json header{{"command", "table"}, {"kind", cfg.kind}, {"ring", cfg.ring},  {"q", to_string(q)},
              {"alpha", cfg.alpha}, {"w", w.to_string()},  {"char", cfg.chi}, {"x", cfg.x}};
  std::vector<Row> rows;
  if (cfg.ring == "exact") {
    if (!(w.is_one() || (w.k == 1 && w.n == 2))) throw ConfigError("--ring exact allows w = 1 or 1/2 only");
    rows = exact_rows(cfg, EulerParams<Rational>(cfg.alpha, q, w.is_one() ? Rational(1) : Rational(-1)),
                      rational_table(chi));
  } else if (cfg.ring == "cyclotomic") {
    rows = exact_rows(cfg, EulerParams<CycloExact>(cfg.alpha, CycloExact(q), w.exact()), exact_table(chi));
  } else if (cfg.ring == "complex") {
    rows = complex_rows(cfg);
  } else if (cfg.ring == "padic") {
    if (cfg.p == 0) throw ConfigError("--ring padic needs --p");
    if (cfg.kind == "zeta" || cfg.kind == "l") throw ConfigError("zeta and l tables are complex-side; use another ring");
    const long prec = cfg.prec > 0 ? cfg.prec : 20;
    header["p"] = cfg.p;
    header["prec"] = prec;
    if (w.is_one()) {
      rows = exact_rows(cfg, EulerParams<PAdic>(cfg.alpha, PAdic(cfg.p, q, prec), PAdic(cfg.p, 1L, prec)),
                        embed_padic(chi, cfg.p, prec));
    } else {
      long level = 0;
      for (long m = 1; m < w.n; m *= cfg.p) ++level;
      if (prime_power(cfg.p, level) != w.n) throw ConfigError("--w must be a p-power root of unity on the p-adic ring");
      const EulerParams<CycloPAdic> params(cfg.alpha, CycloPAdic::constant(PAdic(cfg.p, q, prec), level),
                                           CycloPAdic::root_of_unity(w.k, cfg.p, level, prec));
      rows = exact_rows(cfg, params, embed_padic_cyclotomic(chi, cfg.p, level, prec));
    }
  } else {
    throw ConfigError("--ring: expected exact, cyclotomic, complex or padic");
  }
  emit_rows(cfg, header, rows);
  return 0;
}

RegionTPoint parse_region_point(const std::string& text, long p, long prec) {
  if (text.find(',') != std::string::npos) {
    // Digits d0,d1,... (least significant first).
    Integer value = 0;
    Integer scale = 1;
    std::stringstream ss(text);
    std::string digit;
    long count = 0;
    while (std::getline(ss, digit, ',')) {
      const Rational d = parse_rational_option("s", digit);
      if (d.get_den() != 1 || d < 0 || d >= p) throw ConfigError("--s: digits must lie in [0, p)");
      value += d.get_num() * scale;
      scale *= p;
      ++count;
    }
    return RegionTPoint::padic(PAdic(p, value, std::max(prec, count)));
  }
  const Rational s = parse_rational_option("s", text);
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return RegionTPoint::integer(s.get_num().get_si());
  return RegionTPoint::padic(PAdic(p, s, prec));
}

void emit_value(const RunConfig& cfg, json out, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "value\n\"" << text << "\"\n";
  } else {
    std::cout << text << "\n";
  }
}

void emit_series(const RunConfig& cfg, json header, const SeriesValue& v) {
  header["result"] = encode(v);
  std::ostringstream text;
  text << render(v.value) << "  (terms " << v.terms_used << ", tail <= " << format_double(v.tail_bound) << ")";
  emit_value(cfg, std::move(header), text.str());
}

int cmd_eval(const RunConfig& cfg) {
  json header{{"command", "eval"}, {"kind", cfg.kind}};
  if (cfg.kind == "pl") {
    if (cfg.p == 0) throw ConfigError("eval pl needs --p");
    PlParams params;
    params.p = cfg.p;
    params.alpha = cfg.alpha;
    params.q = parse_rational_option("q", cfg.q);
    params.chi = parse_character(cfg.chi).primitive();
    params.F = cfg.F > 0 ? cfg.F : cfg.p * params.chi.modulus() / std::gcd(cfg.p, params.chi.modulus());
    params.precision = cfg.prec > 0 ? cfg.prec : 10;
    const TwistSpec w = parse_twist(twist_text(cfg), cfg.p);
    if (!w.is_one()) {
      if (w.n != cfg.p) throw ConfigError("eval pl: --w must be 1 or a primitive p-th root (zeta_p or k/p)");
      params.w_level = 1;
      params.w_exponent = w.k;
    }
    params.validate();
    if (cfg.s.empty()) throw ConfigError("eval pl needs --s");
    const RegionTPoint s = parse_region_point(cfg.s, cfg.p, params.precision);
    header.update({{"p", cfg.p}, {"q", to_string(params.q)}, {"alpha", cfg.alpha}, {"w", w.to_string()},
                   {"char", cfg.chi}, {"F", params.F}, {"s", s.to_string()}, {"prec", params.precision}});
    if (w.is_one()) {
      const PAdic v = p_l_function<PAdic>(s, params);
      header["result"] = encode(v);
      emit_value(cfg, header, render(v));
    } else {
      const CycloPAdic v = p_l_function<CycloPAdic>(s, params);
      header["result"] = encode(v);
      emit_value(cfg, header, render(v));
    }
    return 0;
  }
  const LfunParams lp = make_lfun_params(cfg);
  const ComplexF s(cfg.s_re, cfg.s_im);
  const Rational x = parse_rational_option("x", cfg.x);
  header.update({{"q", to_string(lp.q)}, {"alpha", lp.alpha}, {"w", parse_twist(twist_text(cfg)).to_string()},
                 {"char", cfg.chi}, {"s", encode(s)}});
  if (cfg.kind == "zeta") {
    header["x"] = to_string(x);
    emit_series(cfg, header, hurwitz_zeta(s, x, lp));
  } else if (cfg.kind == "l") {
    header["x"] = to_string(x);
    emit_series(cfg, header, x == 0 ? l_function(s, lp) : dirichlet_l(x, s, lp));
  } else if (cfg.kind == "partial-zeta") {
    const long F = cfg.F > 0 ? cfg.F : 1;
    header.update({{"a", cfg.a}, {"F", F}, {"route", cfg.series ? "binomial-series" : "direct"}});
    emit_series(cfg, header, cfg.series ? partial_zeta_series(s, cfg.a, F, lp) : partial_zeta(s, cfg.a, F, lp));
  } else {
    throw ConfigError("eval: kind must be zeta, l, partial-zeta or pl");
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions o;
  if (cfg.p != 0) o.primes = {cfg.p};
  o.level = cfg.level;
  o.precision = cfg.prec;
  o.w = cfg.w;
  o.grid = cfg.grid;
  o.seed = cfg.seed;
  o.sample = cfg.sample;
  o.threads = cfg.threads;

  std::vector<std::string> suites;
  if (cfg.kind == "all") suites = suite_names();
  else suites = {cfg.kind};

  std::vector<SuiteReport> reports;
  for (const auto& suite : suites) reports.push_back(run_suite(suite, o));

  long failures = 0;
  for (const auto& r : reports) failures += r.failed();
  if (cfg.format == "json") {
    json out{{"command", "verify"}, {"seed", cfg.seed}, {"sample", cfg.sample}, {"suites", json::array()}};
    for (const auto& r : reports) out["suites"].push_back(to_json(r));
    out["pass"] = failures == 0;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "suite,id,pass,documented\n";
    for (const auto& r : reports) {
      for (const auto& c : r.cases) {
        std::cout << r.suite << ",\"" << c.id << "\"," << (c.pass ? "PASS" : "FAIL") << ","
                  << (c.documented ? "yes" : "no") << "\n";
      }
    }
  } else {
    for (const auto& r : reports) {
      for (const auto& c : r.cases) {
        if (!c.pass) std::cout << (c.documented ? "DOCUMENTED " : "FAIL ") << r.suite << ": " << c.id << "\n";
      }
      std::cout << r.suite << ": " << r.passed() << "/" << r.cases.size() << " pass, " << r.failed()
                << " fail, " << r.documented() << " documented\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Euler numbers, twisted L-functions and their p-adic interpolation"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--ring", cfg.ring, "Coefficient ring")
      ->check(CLI::IsMember({"exact", "cyclotomic", "complex", "padic"}));
  app.add_option("--n", cfg.n_range, "Index range a..b");
  app.add_option("--x", cfg.x, "Argument x (n or n/d)");
  app.add_option("--q", cfg.q, "Parameter q (n or n/d)");
  app.add_option("--alpha", cfg.alpha, "Weight alpha");
  app.add_option("--w", cfg.w, "Twist: 1, k/n or zeta_p");
  app.add_option("--char", cfg.chi, "Dirichlet character d,index");
  app.add_option("--p", cfg.p, "Odd prime");
  app.add_option("--prec", cfg.prec, "p-adic precision M");
  app.add_option("--N", cfg.level, "Riemann-sum level N");
  app.add_option("--s-re", cfg.s_re, "Real part of s");
  app.add_option("--s-im", cfg.s_im, "Imaginary part of s");
  app.add_option("--s", cfg.s, "p-adic s: integer, n/d, or digits d0,d1,...");
  app.add_option("--a", cfg.a, "Residue class a");
  app.add_option("--F", cfg.F, "Level F");
  app.add_option("--eps", cfg.eps, "Series tolerance");
  app.add_option("--K", cfg.max_terms, "Series term cap");
  app.add_flag("--series", cfg.series, "partial-zeta: use the E_l series route");
  app.add_option("--grid", cfg.grid, "Verification grid")->check(CLI::IsMember({"default", "small"}));
  app.add_option("--seed", cfg.seed, "Seed for --sample");
  app.add_option("--sample", cfg.sample, "Run this many grid cases");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* table = app.add_subcommand("table", "Tabulate a family at n in a range");
  table->add_option("kind", cfg.kind, "euler | gen-euler | zeta | l")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  eval->add_option("kind", cfg.kind, "zeta | l | partial-zeta | pl")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("kind", cfg.kind, "witt | addition | recurrence | distribution | special-values | "
                                       "partial-zeta | s-zero | interpolation | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(cfg);
    if (*eval) return cmd_eval(cfg);
    return cmd_verify(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedEmbedding& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const RegionViolation& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DivergentParameters& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InexactPower& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
