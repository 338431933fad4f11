#include <fstream>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "va/apolar.hpp"
#include "va/error.hpp"
#include "va/parse.hpp"
#include "va/singlocus.hpp"
#include "va/veronese.hpp"
#include "va_cli/corpus.hpp"
#include "va_cli/report.hpp"

namespace {

enum Exit { kVa = 0, kNotVa = 1, kInputError = 2, kDefect = 3 };

struct PolyArgs {
  std::size_t n = 0;
  std::string poly;
};

void add_poly_args(CLI::App* cmd, PolyArgs& args) {
  cmd->add_option("-n", args.n, "number of variables")->required()->check(CLI::Range(2, 8));
  cmd->add_option("-f", args.poly, "homogeneous polynomial")->required();
}

va::Polynomial parse(const PolyArgs& args) { return va::parse_poly(args.poly, args.n); }

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const va::ScopeError& e) {
    std::cerr << "scope error (" << va::to_string(e.kind()) << "): " << e.what() << '\n';
    return kInputError;
  } catch (const va::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const va::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kInputError;
  } catch (const va::DefectError& e) {
    std::cerr << "internal defect: " << e.what() << '\n';
    return kDefect;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDefect;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veronese-avoidance checks for projective hypersurfaces"};
  app.require_subcommand(1);

  // check
  PolyArgs check_args;
  bool json = false, skip_lefschetz = false, timings = false;
  va::CheckOptions opts;
  auto* check = app.add_subcommand("check", "decide whether V(f) is Veronese-avoiding");
  add_poly_args(check, check_args);
  check->add_flag("--json", json, "print the certificate as JSON");
  auto* seed_opt = check->add_option("--seed", opts.seed, "seed for the Lefschetz trials");
  check->add_option("--trials", opts.trials, "Lefschetz trials")->check(CLI::PositiveNumber);
  check->add_option("--coeff-bound", opts.coeff_bound, "Lefschetz coefficient bound")->check(CLI::PositiveNumber);
  check->add_flag("--skip-lefschetz", skip_lefschetz, "do not run the Lefschetz trials");
  check->add_flag("--timings", timings, "include timings in JSON output");

  PolyArgs inv_args;
  auto* inv = app.add_subcommand("inverse-system", "Macaulay inverse system of a smooth hypersurface");
  add_poly_args(inv, inv_args);

  PolyArgs sing_args;
  bool sing_json = false;
  auto* sing = app.add_subcommand("singular", "rational singular points and classification");
  add_poly_args(sing, sing_args);
  sing->add_flag("--json", sing_json, "print JSON");

  PolyArgs lef_args;
  va::CheckOptions lef_opts;
  auto* lef = app.add_subcommand("lefschetz", "random full-rank test of l^(T-2) on the Milnor algebra");
  add_poly_args(lef, lef_args);
  lef->add_option("--seed", lef_opts.seed, "seed");
  lef->add_option("--trials", lef_opts.trials, "trials")->check(CLI::PositiveNumber);
  lef->add_option("--coeff-bound", lef_opts.coeff_bound, "coefficient bound")->check(CLI::PositiveNumber);

  std::size_t f0_n = 0;
  unsigned f0_d = 0;
  auto* f0 = app.add_subcommand("f0", "auxiliary nodal form");
  f0->add_option("-n", f0_n, "number of variables")->required()->check(CLI::Range(3, 8));
  f0->add_option("-d", f0_d, "degree")->required()->check(CLI::Range(3, 60));

  std::size_t dims_n = 0;
  unsigned dims_d = 0;
  auto* dims = app.add_subcommand("dims", "N_d, N_d - n and N_d - n^2");
  dims->add_option("-n", dims_n, "number of variables")->required()->check(CLI::Range(1, 64));
  dims->add_option("-d", dims_d, "degree")->required()->check(CLI::Range(1, 200));

  std::string corpus_file, filter;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bool no_builtin = false, dump = false;
  va::CheckOptions corpus_opts;
  auto* corpus = app.add_subcommand("corpus", "run the built-in corpus and optional extra entries");
  corpus->add_option("--file", corpus_file, "additional corpus file")->check(CLI::ExistingFile);
  corpus->add_option("--filter", filter, "run entries whose name contains this text");
  corpus->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--seed", corpus_opts.seed, "seed for the Lefschetz trials");
  corpus->add_flag("--no-builtin", no_builtin, "skip the built-in entries");
  corpus->add_flag("--dump", dump, "print the built-in corpus and exit");

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    if (json && seed_opt->count() == 0) {
      std::cerr << "--json requires an explicit --seed\n";
      return kInputError;
    }
    return run_guarded([&] {
      opts.lefschetz = !skip_lefschetz;
      const va::VACertificate cert = va::check_va(parse(check_args), opts);
      if (json) std::cout << va::cli::certificate_json(cert, timings).dump(2) << '\n';
      else va::cli::print_certificate(std::cout, cert);
      if (!cert.all_cross_checks_pass()) {
        std::cerr << "a cross-check failed\n";
        return static_cast<int>(kDefect);
      }
      return static_cast<int>(cert.verdict ? kVa : kNotVa);
    });
  }
  if (*inv) {
    return run_guarded([&] {
      const va::JacobianAnalysis a(parse(inv_args));
      const va::InverseSystem s = va::inverse_system(a);
      std::cout << va::render_poly(s.F, va::VariableStyle::Indexed, 'y') << '\n';
      return 0;
    });
  }
  if (*sing) {
    return run_guarded([&] {
      const va::JacobianAnalysis a(parse(sing_args));
      const va::SingularReport rep = va::singular_report(a);
      const va::Classification cls = va::classify(a, rep);
      if (sing_json) std::cout << va::cli::singular_json(rep, cls).dump(2) << '\n';
      else va::cli::print_singular(std::cout, rep, cls);
      return 0;
    });
  }
  if (*lef) {
    return run_guarded([&] {
      const va::JacobianAnalysis a(parse(lef_args));
      const auto res = va::lefschetz_degree_one(a, lef_opts.seed, lef_opts.trials, lef_opts.coeff_bound);
      for (std::size_t t = 0; t < res.determinants.size(); ++t)
        std::cout << "trial " << t << ": l = "
                  << va::cli::render_linear_form(va::lefschetz_trial_form(res.seed, static_cast<unsigned>(t), a.n(),
                                                                          res.coeff_bound))
                  << ", det = " << res.determinants[t].get_str() << '\n';
      std::cout << (res.success ? "full rank" : "no full-rank trial") << '\n';
      return res.success ? 0 : 1;
    });
  }
  if (*f0) {
    return run_guarded([&] {
      std::cout << va::render_poly(va::f0_form(f0_n, f0_d)) << '\n';
      return 0;
    });
  }
  if (*dims) {
    return run_guarded([&] {
      const auto s = va::stratum_dims(dims_n, dims_d);
      std::cout << "N_d = " << s.N_d.get_str() << "\nN_d - n = " << s.nodal_dim.get_str()
                << "\nN_d - n^2 = " << s.linear_system_dim.get_str() << '\n';
      return 0;
    });
  }
  if (*corpus) {
    if (dump) {
      std::cout << va::cli::builtin_corpus_text();
      return 0;
    }
    return run_guarded([&] {
      std::vector<va::cli::CorpusEntry> entries;
      if (!no_builtin) entries = va::cli::builtin_corpus();
      if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        std::stringstream ss;
        ss << in.rdbuf();
        for (auto& e : va::cli::parse_corpus(ss.str())) entries.push_back(std::move(e));
      }
      if (!filter.empty())
        std::erase_if(entries, [&](const auto& e) { return e.name.find(filter) == std::string::npos; });
      const auto results = va::cli::run_corpus(entries, corpus_opts, jobs);
      std::size_t failed = 0;
      for (const auto& r : results) {
        std::printf("%-22s %s %9.1f ms\n", r.name.c_str(), r.pass ? "pass" : "FAIL", r.millis);
        for (const auto& d : r.diffs) std::printf("    %s\n", d.c_str());
        failed += r.pass ? 0 : 1;
      }
      std::printf("%zu entries, %zu failed\n", results.size(), failed);
      return failed == 0 ? 0 : 1;
    });
  }
  return 0;
}
