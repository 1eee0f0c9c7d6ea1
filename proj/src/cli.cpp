#include "regcoal/cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "regcoal/checker.hpp"
#include "regcoal/dual.hpp"
#include "regcoal/report.hpp"
#include "regcoal/spectra.hpp"

namespace regcoal {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string default_format() {
  const char* env = std::getenv("REGCOAL_FORMAT");
  return env && *env ? std::string(env) : std::string("pretty");
}

std::string join(const nlohmann::json& strings, const char* sep = ",") {
  std::string out;
  for (const auto& s : strings) {
    if (!out.empty()) out += sep;
    out += s.get<std::string>();
  }
  return out;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw UsageError("bad coefficient: \"" + item + "\"");
    }
  }
  if (out.empty()) throw UsageError("--coeffs needs at least one coefficient");
  return out;
}

std::string pretty_sum(const VectorQ& coeffs, long precision) {
  std::string out;
  for (long n = 0; n < coeffs.size(); ++n) {
    if (coeffs(n) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coeffs(n)) + ")*a_" + std::to_string(n);
  }
  return (out.empty() ? "0" : out) + " + A_" + std::to_string(precision);
}

struct Options {
  std::string format;
  std::string spectrum;
  std::optional<long> p, q;
  long n = 4;
  long i = 0, j = 0, prec = 8;
  std::string coeffs;
  long l = 1, sample = 5;
  ReportOptions report;
  long max = 0;
  long bridge_max = 8;
};

int emit(std::ostream& out, const std::string& format, const nlohmann::json& j, const std::string& tsv,
         const std::string& pretty) {
  if (format == "json") out << canonical_dump(j);
  else if (format == "tsv") out << tsv;
  else out << pretty;
  return 0;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  const auto& t = *spec.tables;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv, pretty;
  tsv << "n\tpolynomial\tD\tlambda\tLambda\n";
  for (long n = 0; n <= o.n; ++n) {
    const auto& coords = t.monomial_coords(n);
    nlohmann::json lambda = nlohmann::json::array();
    for (const Integer& x : coords.lambda) lambda.push_back(x.str());
    const std::string poly = to_string(t.basis(n));
    const nlohmann::json big = to_json(t.lambda_coords(n));
    rows.push_back({{"n", n}, {"polynomial", poly}, {"D", coords.denominator.str()}, {"lambda", lambda}, {"Lambda", big}});
    tsv << n << '\t' << poly << '\t' << coords.denominator.str() << '\t' << join(lambda) << '\t' << join(big) << '\n';
    pretty << "c_" << n << " = " << poly << "\n    D = " << coords.denominator.str() << ", lambda = [" << join(lambda, ", ")
           << "], Lambda = [" << join(big, ", ") << "]\n";
  }
  nlohmann::json j{{"spectrum", spec.name()},   {"prime", spec.prime},
                   {"step", spec.step},         {"periodic", spec.periodic},
                   {"beta", spec.beta},         {"basis", rows}};
  return emit(out, o.format, j, tsv.str(), pretty.str());
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream tsv, pretty;
  tsv << "n\ti\tj\tvalue\n";
  for (long n = 0; n <= o.n; ++n) {
    const MatrixQ& g = spec.tables->gamma(n);
    rows.push_back({{"n", n}, {"matrix", to_json(g)}});
    pretty << "Gamma^" << n << ":\n";
    for (long a = 0; a < g.rows(); ++a) {
      pretty << "  ";
      for (long b = 0; b < g.cols(); ++b) {
        pretty << (b ? " " : "") << to_string(g(a, b));
        if (g(a, b) != 0) tsv << n << '\t' << a << '\t' << b << '\t' << to_string(g(a, b)) << '\n';
      }
      pretty << '\n';
    }
  }
  return emit(out, o.format, {{"spectrum", spec.name()}, {"gamma", rows}}, tsv.str(), pretty.str());
}

int cmd_product(const Options& o, std::ostream& out) {
  if (o.i < 0 || o.j < 0 || o.prec < 1) throw UsageError("--i, --j must be >= 0 and --prec >= 1");
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  const DualElement prod =
      multiply(DualElement::basis(o.i, o.prec), DualElement::basis(o.j, o.prec), *spec.tables);
  nlohmann::json j{{"spectrum", spec.name()}, {"i", o.i}, {"j", o.j}, {"precision", o.prec},
                   {"coefficients", to_json(prod.coeffs())}};
  std::ostringstream tsv;
  tsv << "n\tcoefficient\n";
  for (long n = 0; n < prod.precision(); ++n) tsv << n << '\t' << to_string(prod[n]) << '\n';
  const std::string pretty = "a_" + std::to_string(o.i) + " a_" + std::to_string(o.j) + " = " +
                             pretty_sum(prod.coeffs(), o.prec) + "\n";
  return emit(out, o.format, j, tsv.str(), pretty);
}

int cmd_invert(const Options& o, std::ostream& out) {
  if (o.prec < 1) throw UsageError("--prec must be >= 1");
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  const auto coeffs = parse_coeffs(o.coeffs);
  VectorQ v = VectorQ::Zero(o.prec);
  for (long n = 0; n < std::min<long>(o.prec, static_cast<long>(coeffs.size())); ++n) v(n) = coeffs[n];
  const DualElement a(v);
  try {
    a.require_integral(spec.tables->ring());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  nlohmann::json j{{"spectrum", spec.name()}, {"precision", o.prec}, {"input", to_json(v)}};
  try {
    const DualElement inv = invert(a, *spec.tables, o.prec);
    const bool ok = multiply(a, inv, *spec.tables) == DualElement::one(*spec.tables, o.prec);
    j["invertible"] = true;
    j["inverse"] = to_json(inv.coeffs());
    j["verified"] = ok;
    std::ostringstream tsv;
    tsv << "n\tcoefficient\n";
    for (long n = 0; n < inv.precision(); ++n) tsv << n << '\t' << to_string(inv[n]) << '\n';
    emit(out, o.format, j, tsv.str(), "inverse = " + pretty_sum(inv.coeffs(), o.prec) + "\n");
    return ok ? 0 : 1;
  } catch (const NotInvertible& e) {
    j["invertible"] = false;
    j["step"] = e.step;
    j["w_exponent"] = e.w_exponent;
    j["pivot"] = to_string(e.pivot);
    const std::string tsv = "invertible\tstep\tw_exponent\tpivot\nno\t" + std::to_string(e.step) + '\t' +
                            std::to_string(e.w_exponent) + '\t' + to_string(e.pivot) + '\n';
    emit(out, o.format, j, tsv, std::string(e.what()) + "\n");
    return 1;
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.l < 1 || o.sample < 1) throw UsageError("--l and --sample must be positive");
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  const TheoremReport r = theorem_report(spec, o.l, o.sample, o.report);
  emit(out, o.format, to_json(r), to_tsv(r), to_pretty(r));
  return r.all_hold() ? 0 : 1;
}

int cmd_regularity(const Options& o, std::ostream& out) {
  const SpectrumSpec spec = make_spectrum(o.spectrum, o.p, o.q);
  const RegularityReport r = verify_regularity(*spec.tables, o.n);
  std::ostringstream tsv, pretty;
  tsv << "check\tpassed\tcounterexample\n";
  pretty << r.coalgebra << " up to index " << r.bound << '\n';
  for (const auto& c : r.checks) {
    tsv << c.name << '\t' << (c.passed ? "yes" : "no") << '\t' << c.counterexample << '\n';
    pretty << "  " << c.name << ": " << (c.passed ? "ok" : "FAILED " + c.counterexample) << '\n';
  }
  emit(out, o.format, to_json(r), tsv.str(), pretty.str());
  return r.passed() ? 0 : 1;
}

int cmd_eq71(const Options& o, std::ostream& out) {
  if (o.max < 1) throw UsageError("--max must be >= 1");
  const Eq71Report r = verify_eq71(o.max);
  std::ostringstream tsv, pretty;
  tsv << "i\tdirect\tclosed_form\n";
  long bad = 0;
  for (const auto& row : r.rows) {
    tsv << row.i << '\t' << row.direct << '\t' << row.closed_form << '\n';
    if (row.direct != row.closed_form) {
      ++bad;
      pretty << "  i=" << row.i << ": direct " << row.direct << ", closed form " << row.closed_form << '\n';
    }
  }
  pretty << "nu_2(3^i - 1) for 1 <= i <= " << o.max << ": " << bad << " mismatches\n";
  emit(out, o.format, to_json(r), tsv.str(), pretty.str());
  return r.passed() ? 0 : 1;
}

int cmd_prop76(const Options& o, std::ostream& out) {
  if (o.max < 0 || o.bridge_max < 0) throw UsageError("--max and --bridge-max must be >= 0");
  const Prop76Report r = check_prop76(make_spectrum(Family::k2, 2), make_spectrum(Family::ko2, 2), o.max, o.bridge_max);
  std::ostringstream tsv, pretty;
  tsv << "kind\ti\tj\tm\texpected\tactual\n";
  for (const auto& c : r.mismatches) {
    tsv << c.formula << '\t' << c.i << '\t' << c.j << '\t' << c.m << '\t' << to_string(c.expected) << '\t'
        << to_string(c.actual) << '\n';
    pretty << "  " << c.formula << " i=" << c.i << " j=" << c.j << " m=" << c.m << ": expected "
           << to_string(c.expected) << ", got " << to_string(c.actual) << '\n';
  }
  for (long m : r.bridge_failures) {
    tsv << "bridge\t\t\t" << m << "\t\t\n";
    pretty << "  bridge identity fails at m=" << m << '\n';
  }
  pretty << r.cells_checked << " transfer cells, " << r.mismatches.size() << " mismatches, "
         << r.bridge_failures.size() << " bridge failures\n";
  emit(out, o.format, to_json(r), tsv.str(), pretty.str());
  return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular coalgebras of K-theory cooperations and their dual operation algebras", "regcoal"};
  app.require_subcommand(1);
  Options o;
  o.format = default_format();
  app.add_option("--format", o.format, "Output format (default from REGCOAL_FORMAT, else pretty)")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.fallthrough();

  auto spectrum_opts = [&o](CLI::App* sub) {
    sub->add_option("spectrum", o.spectrum, "K, k, G, g (with a prime, e.g. \"k(3)\"), KO(2) or ko(2)")->required();
    sub->add_option("--p", o.p, "Prime");
    sub->add_option("--q", o.q, "Primitive root mod p^2 (default: least one)");
  };

  auto* basis = app.add_subcommand("basis", "Basis polynomials with lambda/D and Lambda coordinates");
  spectrum_opts(basis);
  basis->add_option("--n", o.n, "Largest index")->required()->check(CLI::NonNegativeNumber);

  auto* gamma = app.add_subcommand("gamma", "Comultiplication matrices Gamma^0..Gamma^n");
  spectrum_opts(gamma);
  gamma->add_option("--n", o.n, "Largest index")->required()->check(CLI::NonNegativeNumber);

  auto* product = app.add_subcommand("product", "a_i a_j modulo A_prec");
  spectrum_opts(product);
  product->add_option("--i", o.i)->required();
  product->add_option("--j", o.j)->required();
  product->add_option("--prec", o.prec)->required();

  auto* inv = app.add_subcommand("invert", "Inverse of sum r_n a_n modulo A_prec");
  spectrum_opts(inv);
  inv->add_option("--coeffs", o.coeffs, "Comma-separated exact rationals r_0,r_1,...")->required();
  inv->add_option("--prec", o.prec)->required();

  auto* check = app.add_subcommand("check", "Unit and congruence conditions over the sets N_l");
  spectrum_opts(check);
  check->add_option("--l", o.l)->required();
  check->add_option("--sample", o.sample, "Elements of each N_l to use")->capture_default_str();
  check->add_option("--n-max", o.report.n_max, "Largest n for the congruence condition")->capture_default_str();
  check->add_option("--precision", o.report.precision, "Expansion cross-check precision (0 = off)")
      ->capture_default_str();
  check->add_option("--bound", o.report.bound, "Index bound for coalgebra-side checks")->capture_default_str();
  check->add_flag("--include-negative-controls", o.report.include_negative_controls,
                  "Also check indices outside N_l");
  check->add_flag("--all-indices", o.report.all_indices, "Replace every N_l by all n >= 1");

  auto* regularity = app.add_subcommand("regularity", "Regularity of the coalgebra up to an index");
  spectrum_opts(regularity);
  regularity->add_option("--n", o.n, "Largest index")->required()->check(CLI::NonNegativeNumber);

  auto* eq71 = app.add_subcommand("verify-eq71", "nu_2(3^i - 1) against its closed form");
  eq71->add_option("--max", o.max)->required();

  auto* prop76 = app.add_subcommand("prop76", "Gamma transfer between k(2) and ko(2)");
  prop76->add_option("--max", o.max)->required();
  prop76->add_option("--bridge-max", o.bridge_max)->capture_default_str();

  std::vector<std::string> argv_store{"regcoal"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*basis) return cmd_basis(o, out);
    if (*gamma) return cmd_gamma(o, out);
    if (*product) return cmd_product(o, out);
    if (*inv) return cmd_invert(o, out);
    if (*check) return cmd_check(o, out);
    if (*regularity) return cmd_regularity(o, out);
    if (*eq71) return cmd_eq71(o, out);
    if (*prop76) return cmd_prop76(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace regcoal
