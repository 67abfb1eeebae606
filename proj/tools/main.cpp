// Command-line surface for the interval subdivision library.
//
// Exit codes: 0 success, 1 computation-level error, 2 usage or malformed
// input.  Diagnostics go to stderr, data to stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "intsub/analysis.hpp"
#include "intsub/interval.hpp"
#include "intsub/matrices.hpp"
#include "intsub/selftest.hpp"
#include "intsub/signed_perm.hpp"
#include "intsub/spectral.hpp"

namespace {

using namespace intsub;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string vec_plain(const std::vector<Int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i].get_str();
  }
  return out.str();
}

std::string vec_json(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].get_str();
  }
  out << "]";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Interval subdivision of simplicial complexes: exact "
               "f/h-vector transforms, type-B Eulerian polynomials, "
               "real-rootedness checks, spectral and limit analysis"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "tsv"}));

  std::string file;
  auto* fvec = app.add_subcommand("fvec", "Print the f-vector of a complex");
  fvec->add_option("file", file, "Facet file")->required();
  auto* hvec = app.add_subcommand("hvec", "Print the h-vector of a complex");
  hvec->add_option("file", file, "Facet file")->required();

  auto* subdivide =
      app.add_subcommand("subdivide", "Compute the interval subdivision");
  int times = 1;
  bool counts_only = false;
  std::string sidecar_path;
  subdivide->add_option("file", file, "Facet file")->required();
  subdivide->add_option("--times", times, "Number of subdivision rounds")
      ->check(CLI::NonNegativeNumber);
  subdivide->add_flag("--counts-only", counts_only,
                      "Print only the resulting f- and h-vectors");
  subdivide->add_option("--sidecar", sidecar_path,
                        "Write the label-to-interval mapping here");

  auto* matrix = app.add_subcommand("matrix", "Dump a transformation matrix");
  std::string kind = "r";
  std::string method = "eulerian";
  int dim = 0;
  matrix->add_option("--kind", kind, "Matrix kind")
      ->check(CLI::IsMember({"f", "h", "hinv", "r"}))
      ->required();
  matrix->add_option("--dim", dim, "Dimension parameter d")->required();
  matrix->add_option("--method", method, "Route for the r matrix")
      ->check(CLI::IsMember({"algebraic", "eulerian"}));

  auto* eulerian =
      app.add_subcommand("eulerian", "Dump a j-Eulerian polynomial");
  std::string ekind;
  std::string emethod = "default";
  int ed = 0, ej = 0;
  eulerian->add_option("--kind", ekind, "Polynomial family")
      ->check(CLI::IsMember({"a", "b", "b+", "b-", "t"}))
      ->required();
  eulerian->add_option("--d", ed, "Rank d")->required();
  eulerian->add_option("--j", ej, "First letter j")->required();
  eulerian->add_option("--method", emethod, "Computation route")
      ->check(CLI::IsMember({"default", "enumerate", "recurrence", "e2"}));

  auto* analyze = app.add_subcommand(
      "analyze", "Full report for the h-polynomial of the subdivision");
  analyze->add_option("file", file, "Facet file")->required();

  auto* limit = app.add_subcommand("limit-roots",
                                   "Root trajectory of iterated subdivision");
  int iters = 12;
  double tol = 1e-6;
  limit->add_option("file", file, "Facet file")->required();
  limit->add_option("--iters", iters, "Number of iterations");
  limit->add_option("--tol", tol, "Convergence tolerance");

  auto* selftest =
      app.add_subcommand("selftest", "Run the full cross-validation battery");
  int max_d = 8;
  std::uint64_t seed = 0;
  selftest->add_option("--max-d", max_d, "Largest dimension parameter");
  selftest->add_option("--seed", seed, "Seed for randomized suites");

  // Let the global --format be given after the subcommand name, and fold
  // every usage-level parse failure into exit code 2.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*fvec || *hvec) {
    auto K = SimplicialComplex::parse(read_file(file));
    auto f = f_vector(K);
    const std::vector<Int>& v = *fvec ? f.counts : h_from_f(f).values;
    std::cout << (format == "json" ? vec_json(v) : vec_plain(v)) << "\n";
  } else if (*subdivide) {
    auto K = SimplicialComplex::parse(read_file(file));
    if (counts_only) {
      FVector f = iterate_f(f_vector(K), times);
      std::cout << "f: " << vec_plain(f.counts) << "\n";
      std::cout << "h: " << vec_plain(h_from_f(f).values) << "\n";
    } else {
      IntervalLabeling labeling;
      for (int i = 0; i < times; ++i) {
        auto [next, lab] = interval_complex(K);
        K = next;
        labeling = lab;
      }
      std::cout << K.serialize();
      if (!sidecar_path.empty()) {
        std::ofstream out(sidecar_path);
        out << labeling.sidecar();
      }
    }
  } else if (*matrix) {
    IntMatrix m = kind == "f"      ? f_matrix(dim)
                  : kind == "h"    ? h_matrix(dim)
                  : kind == "hinv" ? h_matrix_inverse(dim)
                                   : r_matrix(dim, method == "algebraic"
                                                       ? RMethod::Algebraic
                                                       : RMethod::Eulerian);
    std::cout << (format == "json" ? m.to_json() + "\n" : m.to_tsv());
  } else if (*eulerian) {
    EulerianPolynomial p =
        ekind == "a"
            ? a_poly(ed, ej,
                     emethod == "recurrence" ? EulerianMethod::Recurrence
                                             : EulerianMethod::Enumerate)
        : ekind == "b"  ? b_poly(ed, ej)
        : ekind == "b+" ? bplus_poly(ed, ej,
                                     emethod == "enumerate"
                                         ? EulerianMethod::Enumerate
                                     : emethod == "e2" ? EulerianMethod::E2
                                         : EulerianMethod::Recurrence)
        : ekind == "b-" ? bminus_poly(ed, ej)
                        : t_poly(ed, ej);
    if (format == "tsv") {
      for (int k = 0; k <= p.coeffs.degree(); ++k)
        std::cout << ed << '\t' << ej << '\t' << k << '\t'
                  << p.coeffs.coeff(k).get_num().get_str() << '\n';
    } else {
      std::cout << p.coeffs.pretty() << "\n";
    }
  } else if (*analyze) {
    auto K = SimplicialComplex::parse(read_file(file));
    HVector h = h_interval(h_from_f(f_vector(K)));
    Poly p = h_polynomial(h);
    const bool rr = is_real_rooted(p);
    long roots = p.degree() <= 0 ? 0 : count_real_roots(square_free_part(p));
    std::cout << "{\"realRooted\": " << (rr ? "true" : "false")
              << ", \"distinctRealRoots\": " << roots
              << ", \"logConcave\": " << (is_log_concave(p) ? "true" : "false")
              << ", \"unimodal\": " << (is_unimodal(p) ? "true" : "false")
              << ", \"charneyDavis\": \"" << to_string(charney_davis_check(h))
              << "\"}\n";
  } else if (*limit) {
    auto K = SimplicialComplex::parse(read_file(file));
    RootTrajectory traj = limit_convergence_report(f_vector(K), iters, tol);
    std::cout << traj.to_json() << "\n";
  } else if (*selftest) {
    bool all = true;
    for (const SuiteResult& r : run_selftest({max_d, seed})) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.passed) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
      all = all && r.passed;
    }
    return all ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedMethod& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << " (iteration " << e.iteration
              << ")\n";
    return 1;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
