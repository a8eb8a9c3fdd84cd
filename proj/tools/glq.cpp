// SPDX-License-Identifier: Apache-2.0

// glq: normal forms, matrix powers, inverses and the verification suite for
// the dual GL_q(1|1) calculus.
//
// Exit codes: 0 success, 1 a check or comparison failed, 2 usage, parse or
// algebra errors.

#include "glq/checks.hpp"
#include "glq/expr.hpp"
#include "glq/supermatrix.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace glq;

constexpr int kUsage = 2;
constexpr int kFailed = 1;

Algebra resolve_algebra(const std::string& name) {
  const auto names = builtin_algebra_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return builtin_algebra(name);
  if (std::filesystem::is_regular_file(name)) {
    std::ifstream in(name);
    std::stringstream buf;
    buf << in.rdbuf();
    Algebra alg = load_presentation(buf.str());
    return alg->has_invertibles() ? derive_inverse_rules(alg) : alg;
  }
  std::string known;
  for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
  throw AlgebraError("unknown algebra '" + name + "' (built-ins: " + known +
                     "; or a presentation JSON file)");
}

void print_matrix(const SuperMatrix& m, Notation notation) {
  static const char* names[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 4; ++i)
    std::cout << names[i] << " = " << format_element(m(i / 2, i % 2), notation) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the dual GL_q(1|1) superalgebra"};
  app.require_subcommand(1);
  bool unicode = false, latex = false;
  app.add_flag("--unicode", unicode, "Render elements with Greek letters");
  app.add_flag("--latex", latex, "Render elements as LaTeX math");

  std::string nf_algebra = "dual", nf_expr;
  auto* nf = app.add_subcommand("nf", "Print the normal form of an expression");
  nf->add_option("--algebra", nf_algebra, "Built-in algebra name or presentation JSON file")
      ->capture_default_str();
  nf->add_option("expr", nf_expr, "Expression, e.g. \"c*b\"")->required();

  int pow_n = 1;
  bool closed = false, direct = false, compare = false, amended = false;
  auto* matpow = app.add_subcommand("matpow", "Entries of the n-th power of the dual matrix");
  matpow->add_option("--n", pow_n, "Power")->required()->check(CLI::PositiveNumber);
  auto* g_closed = matpow->add_flag("--closed-form", closed, "Use the closed-form entries");
  auto* g_direct = matpow->add_flag("--direct", direct, "Multiply out (default)");
  auto* g_compare = matpow->add_flag("--compare", compare, "Compare closed form and direct power");
  g_closed->excludes(g_direct)->excludes(g_compare);
  g_direct->excludes(g_compare);
  matpow->add_flag("--amended", amended,
                   "For even powers, build D on c*b instead of b*c in the closed form");

  auto* inverse = app.add_subcommand("inverse", "Entries of the inverse of the dual matrix");
  auto* sdet_cmd = app.add_subcommand("sdet", "Superdeterminant of the dual matrix");

  std::string pres_algebra = "dual";
  auto* pres = app.add_subcommand("presentation", "Dump a presentation descriptor as JSON");
  pres->add_option("--algebra", pres_algebra, "Built-in algebra name or presentation JSON file")
      ->capture_default_str();

  SuiteOptions suite;
  std::vector<std::string> only;
  std::string format = "text";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--max-n", suite.max_n, "Largest n for the power checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "Comma-separated check ids")->delimiter(',');
  verify->add_option("--seed", suite.seed, "Seed for the fuzz checks")->capture_default_str();
  verify->add_option("--format", format, "text or machine")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_flag("--timing", timing, "Fill in elapsed_ms in machine output");
  verify->add_flag("--parallel", suite.parallel, "Run checks on worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const Notation notation = latex ? Notation::latex : unicode ? Notation::unicode : Notation::ascii;
  try {
    if (*nf) {
      const Algebra alg = resolve_algebra(nf_algebra);
      std::cout << print(parse_element(nf_expr, alg), notation) << '\n';
      return 0;
    }
    if (*matpow) {
      const Algebra alg = builtin_algebra("dual");
      const int half = (pow_n + 1) / 2;
      auto formula = [&] {
        if (pow_n % 2 == 1) return closed_form_odd(alg, half);
        return amended ? closed_form_even_amended(alg, half) : closed_form_even(alg, half);
      };
      if (closed) {
        print_matrix(formula(), notation);
        return 0;
      }
      const SuperMatrix power_m = power(dual_matrix(alg), pow_n);
      if (!compare) {
        print_matrix(power_m, notation);
        return 0;
      }
      const SuperMatrix f = formula();
      const bool equal = power_m == f;
      std::cout << (equal ? "equal" : "differ") << '\n';
      static const char* names[] = {"A", "B", "C", "D"};
      for (int i = 0; i < 4; ++i) {
        const Element &x = power_m(i / 2, i % 2), &y = f(i / 2, i % 2);
        std::cout << names[i] << " power   = " << format_element(x, notation) << '\n'
                  << names[i] << " formula = " << format_element(y, notation) << '\n';
        if (!(x == y))
          std::cout << names[i] << " power - formula = " << format_element(x - y, notation)
                    << '\n';
      }
      return equal ? 0 : kFailed;
    }
    if (*inverse) {
      print_matrix(left_inverse(dual_matrix(builtin_algebra("dual"))), notation);
      return 0;
    }
    if (*sdet_cmd) {
      std::cout << format_element(sdet(dual_matrix(builtin_algebra("dual"))), notation) << '\n';
      return 0;
    }
    if (*pres) {
      std::cout << dump_presentation(*resolve_algebra(pres_algebra)) << '\n';
      return 0;
    }
    if (*verify) {
      suite.only = only;
      const auto reports = run_suite(suite);
      std::cout << (format == "machine" ? format_machine(reports, timing) : format_text(reports));
      return any_failed(reports) ? kFailed : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
