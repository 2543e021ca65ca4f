// Command-line workbench for the enveloping-algebra engine: construct the
// named central elements, run the verification suites, and query eigenvalues,
// central characters, and module actions.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ugl/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace ugl;

Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "latex") return Format::latex;
  if (f == "json") return Format::json;
  throw CLI::ValidationError("--format must be text, latex, or json");
}

struct ElementSpec {
  EnvElement value;
  int n = 0;
};

int guard_for(int requested, int max_n) {
  if (requested > max_n)
    throw CLI::ValidationError("dimension " + std::to_string(requested) +
                               " exceeds the expansion guard (override with --max-n)");
  return requested;
}

ElementSpec build_element(const std::vector<std::string>& desc, int n_flag, int max_n,
                          Exec ex) {
  if (desc.empty()) throw CLI::ValidationError("missing element descriptor");
  const std::string& kind = desc[0];
  auto need = [&](std::size_t k) {
    if (desc.size() != k + 1)
      throw CLI::ValidationError("descriptor '" + kind + "' expects " + std::to_string(k) +
                                 " parameter(s)");
  };
  ElementSpec out;
  if (kind == "H" || kind == "Hshift" || kind == "C") {
    need(2);
    int n = guard_for(std::stoi(desc[1]), max_n);
    int k = std::stoi(desc[2]);
    out.n = n;
    out.value = kind == "H"        ? capelli_H(n, k)
                : kind == "Hshift" ? capelli_H_shift(n, k)
                                   : capelli_C(n, k);
    return out;
  }
  if (kind == "Krect") {
    need(2);
    int n = guard_for(std::stoi(desc[1]), max_n);
    int p = std::stoi(desc[2]);
    out.n = n;
    out.value = rectangular_K(n, p, ex);
    return out;
  }
  if (kind == "K" || kind == "Kshaped") {
    need(1);
    Shape lam = Shape::parse(desc[1]);
    int n = n_flag > 0 ? n_flag : (lam.rows() ? lam.part(0) : 1);
    guard_for(n, max_n);
    out.n = n;
    out.value = kind == "K" ? capelli_deruyts(lam, n, ex) : shaped_K(lam, n, ex);
    return out;
  }
  if (kind == "cdet-poly") {
    throw CLI::ValidationError("cdet-poly is handled before element construction");
  }
  if (kind.size() >= 2 && kind[0] == 'e') {
    // e12 or e(1,2): a single generator, mainly for centrality counterexamples
    int i = 0, j = 0;
    if (kind.size() == 3 && isdigit(kind[1]) && isdigit(kind[2])) {
      i = kind[1] - '0';
      j = kind[2] - '0';
    } else if (std::sscanf(kind.c_str(), "e(%d,%d)", &i, &j) != 2) {
      throw CLI::ValidationError("cannot parse generator '" + kind + "'");
    }
    int n = n_flag > 0 ? n_flag : std::max(i, j);
    out.n = n;
    out.value = EnvElement::generator(Context::make(0, n), Symbol::proper(i), Symbol::proper(j));
    return out;
  }
  throw CLI::ValidationError("unknown element descriptor '" + kind + "'");
}

void print_report(const SuiteReport& rep, Format fmt) {
  if (fmt == Format::json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return;
  }
  for (const auto& id : rep.identities)
    std::printf("[%s] %-60s %8.1f ms  %s\n", id.pass ? "PASS" : "FAIL", id.name.c_str(),
                id.millis, id.note.c_str());
  std::printf("suite %s: %s (%zu identities)\n", rep.suite.c_str(),
              rep.all_pass() ? "PASS" : "FAIL", rep.identities.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Capelli elements in U(gl(n))"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  int jobs = 0;
  int max_n = 5;
  std::uint64_t seed = 20240901;
  app.add_option("--format", format, "output format: text|latex|json")->capture_default_str();
  app.add_option("--jobs", jobs, "run suite identities concurrently")->capture_default_str();
  app.add_option("--max-n", max_n, "guard for full determinant expansion")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

  // element
  auto* cmd_element = app.add_subcommand("element", "construct and print a named element");
  std::vector<std::string> el_desc;
  int el_n = 0;
  std::string el_var = "t";
  cmd_element->add_option("descriptor", el_desc,
                          "H n k | Hshift n p | C n p | K l | Krect n p | Kshaped l | cdet-poly n")
      ->expected(-1);
  cmd_element->add_option("--n", el_n, "ambient gl(n) (defaults to the shape width)");
  cmd_element->add_option("--var", el_var, "cdet-poly variable: t or s")
      ->capture_default_str();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int v_n = 0, v_p = 0;
  std::string v_shape, v_M, v_element;
  int cases = 50;
  cmd_verify->add_option("suite", suite,
                         "capelli-identity|hook|row-insertion|expansion|factorization|"
                         "centrality|hc|koszul|proof-machinery")
      ->required();
  cmd_verify->add_option("--n", v_n, "dimension filter");
  cmd_verify->add_option("--p", v_p, "row-count filter");
  cmd_verify->add_option("--shape", v_shape, "partition, e.g. 3,2");
  cmd_verify->add_option("--M", v_M, "index subset, e.g. 1,2");
  cmd_verify->add_option("--element", v_element, "element for the centrality suite");
  cmd_verify->add_option("--cases", cases, "randomized cases per property")
      ->capture_default_str();

  // hc
  auto* cmd_hc = app.add_subcommand("hc", "central character (Harish-Chandra image)");
  std::vector<std::string> hc_desc;
  int hc_n = 0;
  cmd_hc->add_option("descriptor", hc_desc, "element descriptor")->expected(-1);
  cmd_hc->add_option("--n", hc_n, "ambient gl(n)");

  // eigen
  auto* cmd_eigen = app.add_subcommand("eigen", "eigenvalue of K^shape on v_mu");
  std::string eig_shape, eig_mu;
  cmd_eigen->add_option("--shape", eig_shape, "partition")->required();
  cmd_eigen->add_option("--mu", eig_mu, "highest weight, n entries")->required();

  // act
  auto* cmd_act = app.add_subcommand("act", "apply an element to a polynomial");
  std::vector<std::string> act_desc;
  std::string act_on;
  int act_d = 0, act_n = 0;
  cmd_act->add_option("--element", act_desc, "element descriptor")->expected(-1)->required();
  cmd_act->add_option("--on", act_on, "polynomial, e.g. \"(1|1)(2|2)\"")->required();
  cmd_act->add_option("--d", act_d, "number of columns")->required();
  cmd_act->add_option("--n", act_n, "ambient gl(n)");

  CLI11_PARSE(app, argc, argv);

  try {
    Format fmt = parse_format(format);
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(std::max(jobs, 1));
#endif
    SuiteOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.max_n = max_n;
    opt.cases = cases;

    if (app.got_subcommand(cmd_element)) {
      if (!el_desc.empty() && el_desc[0] == "cdet-poly") {
        if (el_desc.size() != 2)
          throw CLI::ValidationError("cdet-poly expects the dimension n");
        int n = guard_for(std::stoi(el_desc[1]), max_n);
        EnvPoly poly = el_var == "s" ? capelli_C_poly(n) : capelli_H_poly(n);
        bool first = true;
        for (int k = 0; k <= poly.degree(); ++k) {
          if (poly.coeff(k).is_zero()) continue;
          if (!first) std::cout << " + ";
          std::cout << "(" << render(poly.coeff(k), fmt) << ")";
          if (k > 0) std::cout << "*" << el_var << (k > 1 ? "^" + std::to_string(k) : "");
          first = false;
        }
        std::cout << "\n";
        return 0;
      }
      ElementSpec el = build_element(el_desc, el_n, max_n, opt.exec);
      std::cout << render(el.value, fmt) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_verify)) {
      SuiteReport rep;
      if (suite == "hook")
        rep = suite_hook(opt, v_n, v_p);
      else if (suite == "row-insertion")
        rep = suite_row_insertion(opt,
                                  v_shape.empty() ? std::nullopt
                                                  : std::optional<Shape>(Shape::parse(v_shape)),
                                  v_M.empty() ? std::nullopt
                                              : std::optional<std::vector<int>>(
                                                    parse_int_list(v_M)));
      else if (suite == "expansion")
        rep = suite_expansion(opt,
                              v_shape.empty() ? std::nullopt
                                              : std::optional<Shape>(Shape::parse(v_shape)),
                              v_M.empty() ? std::nullopt
                                          : std::optional<std::vector<int>>(
                                                parse_int_list(v_M)));
      else if (suite == "factorization")
        rep = suite_factorization(opt, v_n, v_p);
      else if (suite == "centrality")
        rep = suite_centrality(opt, v_element, v_n);
      else if (suite == "hc")
        rep = suite_hc(opt, v_n);
      else if (suite == "koszul")
        rep = suite_koszul(opt, v_n);
      else
        rep = run_suite(suite, opt);
      print_report(rep, fmt);
      return rep.all_pass() ? 0 : 1;
    }
    if (app.got_subcommand(cmd_hc)) {
      ElementSpec el = build_element(hc_desc, hc_n, max_n, opt.exec);
      std::cout << render(hc_image(el.value, el.n, true, opt.exec), fmt) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_eigen)) {
      Shape lam = Shape::parse(eig_shape);
      std::vector<int> mu = parse_int_list(eig_mu);
      std::cout << hook_eigenvalue(lam, mu, static_cast<int>(mu.size())).str() << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_act)) {
      ElementSpec el = build_element(act_desc, act_n, max_n, opt.exec);
      RepContextPtr rctx = RepContext::make(0, el.n, act_d);
      SuperPolynomial p = parse_superpoly(rctx, act_on);
      std::cout << render(act(el.value, p, opt.exec), fmt) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
