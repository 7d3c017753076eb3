// tncalc: exact evaluation of the polynomial family T_n(z), its integer
// sequences, and the incomplete-Gamma cross-checks.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tncalc/checks.hpp"
#include "tncalc/exact.hpp"
#include "tncalc/gamma.hpp"
#include "tncalc/oeis.hpp"
#include "tncalc/sequences.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct EvalArgs {
  unsigned n = 0;
  std::string z_text;
  std::string method = "power";
};

int run_eval(const EvalArgs& args) {
  tncalc::Rational z = tncalc::parse_rational(args.z_text);

  if (args.method == "gamma") {
    tncalc::Rational x(z + args.n);
    if (x <= 0)
      throw std::domain_error("method gamma requires z + n > 0 (got " +
                              tncalc::to_string(x) + ")");
    if (x > 709)
      throw std::domain_error("method gamma: e^{z+n} exceeds double range");
    tncalc::Rational exact = tncalc::tn_power_sum(args.n, z);
    double numeric =
        std::exp(x.get_d()) *
        tncalc::upper_gamma_numeric(static_cast<double>(args.n) + 1.0, x.get_d()).value;
    double rel = std::fabs(numeric - exact.get_d()) / std::fabs(exact.get_d());
    std::printf("%.17g %.3e\n", numeric, rel);
    return kExitOk;
  }

  tncalc::Rational value;
  if (args.method == "direct")
    value = tncalc::tn_direct(args.n, tncalc::Rational(0), z);
  else if (args.method == "rec")
    value = tncalc::tn_recurrence(args.n, z);
  else if (args.method == "power")
    value = tncalc::tn_power_sum(args.n, z);
  else if (args.method == "shifted")
    value = tncalc::tn_shifted_sum(args.n, z);
  else
    throw std::logic_error("unreachable: method validated by the parser");
  std::cout << tncalc::to_string(value) << "\n";
  return kExitOk;
}

int run_table(const std::string& z_text, unsigned n_max) {
  tncalc::Rational z = tncalc::parse_rational(z_text);
  for (unsigned n = 0; n <= n_max; ++n)
    std::cout << n << " " << tncalc::to_string(tncalc::tn_power_sum(n, z)) << "\n";
  return kExitOk;
}

int run_poly(unsigned n, const std::string& center_text) {
  tncalc::Rational center = tncalc::parse_rational(center_text);
  tncalc::TnPolynomial poly = tncalc::tn_polynomial(n, center);
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
    if (k > 0) std::cout << " ";
    std::cout << tncalc::to_string(poly.coeffs[k]);
  }
  std::cout << "\n";
  return kExitOk;
}

int run_bfile(const std::string& seq, unsigned count, const std::string& out_path) {
  tncalc::SequenceTable table =
      tncalc::generate(tncalc::sequence_id_from_string(seq), count);
  std::string text = tncalc::emit_bfile(table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return kExitOk;
}

int run_gamma(double a, double x) {
  tncalc::FloatApprox g = tncalc::upper_gamma_numeric(a, x);
  std::printf("%.17g %.3e\n", g.value, g.rel_err_bound);
  return kExitOk;
}

int run_check(const tncalc::CheckOptions& options) {
  std::vector<tncalc::CheckResult> results = tncalc::run_all_checks(options);
  std::size_t total_cases = 0;
  std::size_t failed_suites = 0;
  for (const tncalc::CheckResult& r : results) {
    total_cases += r.cases;
    std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
              << r.cases << " cases)\n";
    if (!r.passed()) {
      ++failed_suites;
      for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
    }
  }
  std::cout << results.size() - failed_suites << "/" << results.size()
            << " suites passed, " << total_cases << " cases\n";
  return failed_suites == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation of the polynomial family T_n(z), its integer "
               "sequences, and the incomplete Gamma identity"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate T_n(z) by one route");
  eval->add_option("n", eval_args.n, "degree n >= 0")->required();
  eval->add_option("z", eval_args.z_text, "argument z, integer or p/q")->required();
  eval->add_option("--method", eval_args.method,
                   "direct | rec | power | shifted | gamma (default power)")
      ->check(CLI::IsMember({"direct", "rec", "power", "shifted", "gamma"}));

  std::string table_z;
  unsigned table_n_max = 0;
  CLI::App* table = app.add_subcommand("table", "Print n, T_n(z) for n = 0..n_max");
  table->add_option("z", table_z, "argument z, integer or p/q")->required();
  table->add_option("n_max", table_n_max, "last degree")->required();

  unsigned poly_n = 0;
  std::string poly_center;
  CLI::App* poly = app.add_subcommand("poly", "Coefficients of T_n in powers of (z - center)");
  poly->add_option("n", poly_n, "degree n >= 0")->required();
  poly->add_option("center", poly_center, "basis center, integer or p/q")->required();

  std::string bfile_seq;
  unsigned bfile_count = 0;
  std::string bfile_out;
  CLI::App* bfile = app.add_subcommand("bfile", "Emit an OEIS b-file");
  bfile->add_option("--seq", bfile_seq, "A000166 | A001865 | A001863 | A129137")->required();
  bfile->add_option("--count", bfile_count, "number of terms (>= 1)")->required();
  bfile->add_option("--out", bfile_out, "output path (stdout when omitted)");

  double gamma_a = 0.0, gamma_x = 0.0;
  CLI::App* gamma = app.add_subcommand("gamma", "Upper incomplete Gamma(a, x), numeric");
  gamma->add_option("a", gamma_a, "order, 0 < a <= 170")->required();
  gamma->add_option("x", gamma_x, "lower integration bound, x >= 0")->required();

  tncalc::CheckOptions check_options;
  std::string check_fixture;
  CLI::App* check = app.add_subcommand("check", "Run every cross-check suite");
  check->add_option("--n-max", check_options.n_max, "largest degree (default 20)");
  check->add_option("--z-min", check_options.z_min, "smallest integer z (default -30)");
  check->add_option("--z-max", check_options.z_max, "largest integer z (default 30)");
  check->add_option("--fixture", check_fixture,
                    "b-file with reference derangement numbers (default: embedded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*table) return run_table(table_z, table_n_max);
    if (*poly) return run_poly(poly_n, poly_center);
    if (*bfile) return run_bfile(bfile_seq, bfile_count, bfile_out);
    if (*gamma) return run_gamma(gamma_a, gamma_x);
    if (*check) {
      if (!check_fixture.empty()) check_options.fixture_path = check_fixture;
      return run_check(check_options);
    }
  } catch (const tncalc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tncalc::bfile_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tncalc::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
