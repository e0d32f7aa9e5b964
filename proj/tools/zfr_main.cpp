// zfr: build counterexample hypergraphs, compute their independence
// polynomials and issue root certificates.

#include <iostream>

#include <CLI11.hpp>

#include "zfr/commands.hpp"

namespace {

using zfr::cli::PolySource;

struct Options {
  std::size_t k = 0;
  std::size_t delta = 0;
  std::vector<std::size_t> deltas;
  std::string input = "-";
  std::string mode = "analytic";
  std::string at;
  std::string c = "1";
  std::string tol = "1e-12";
  std::vector<std::string> real_interval;
  std::string verify;
  bool bruteforce = false;
  bool closed_form = false;
  bool complex = false;
  bool float_mode = false;
  bool mutate = false;
};

PolySource source_of(const Options& o) {
  if (o.bruteforce && o.closed_form) throw zfr::cli::UsageError("--bruteforce and --closed-form are exclusive");
  return o.bruteforce ? PolySource::BruteForce : PolySource::ClosedForm;
}

void add_source_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--bruteforce", o.bruteforce, "Independence polynomial of the input itself, by enumeration");
  cmd->add_flag("--closed-form", o.closed_form, "Z_{S_G} of the input G via the subset-sum formula (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence-polynomial counterexamples for linear hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen_h = app.add_subcommand("gen-h", "Emit the modular-lines hypergraph H_{k,delta}");
  gen_h->add_option("--k", o.k, "Uniformity (>= 2)")->required();
  gen_h->add_option("--delta", o.delta, "Degree (>= k)")->required();

  auto* cx = app.add_subcommand("counterexample", "Emit S_H for the parity-trimmed H_{k-1,delta}");
  cx->add_option("--k", o.k, "Uniformity of S_H (>= 3)")->required();
  cx->add_option("--delta", o.delta, "Maximum degree")->required();

  auto* transform = app.add_subcommand("transform", "Apply the S_G transform");
  transform->add_option("--input", o.input, "Hypergraph JSON file, or - for stdin");

  auto* poly = app.add_subcommand("poly", "Independence polynomial coefficients");
  poly->add_option("--input", o.input, "Hypergraph JSON file, or - for stdin");
  add_source_flags(poly, o);

  auto* eval = app.add_subcommand("eval", "Evaluate the polynomial at a rational point");
  eval->add_option("--input", o.input, "Hypergraph JSON file, or - for stdin");
  eval->add_option("--at", o.at, "Point as NUM/DEN or decimal")->required();
  eval->add_flag("--float", o.float_mode, "Compensated double-precision evaluation (non-rigorous)");
  add_source_flags(eval, o);

  auto* roots = app.add_subcommand("roots", "Real-root brackets and numeric complex roots");
  roots->add_option("--input", o.input, "Hypergraph JSON file, or - for stdin");
  roots->add_option("--real-interval", o.real_interval, "LO HI (default -1 0)")->expected(2);
  roots->add_flag("--complex", o.complex, "Also compute all complex roots (Aberth-Ehrlich)");
  roots->add_option("--tol", o.tol, "Bracket width / convergence tolerance");
  add_source_flags(roots, o);

  auto* certify = app.add_subcommand("certify", "Root certificate for the k-uniform counterexample");
  certify->add_option("--k", o.k, "Uniformity (>= 3)");
  certify->add_option("--delta", o.delta, "Maximum degree");
  certify->add_option("--mode", o.mode, "explicit | analytic")->check(CLI::IsMember({"explicit", "analytic"}));
  certify->add_option("--verify", o.verify, "Re-check a certificate JSON file (or -) instead of issuing one");

  auto* sweep = app.add_subcommand("sweep", "CSV comparing certified root bounds with the conjectured radius");
  sweep->add_option("--k", o.k, "Uniformity (>= 3)")->required();
  sweep->add_option("--delta", o.deltas, "Degrees (repeat or comma-separate)")->delimiter(',');
  sweep->add_option("--C", o.c, "Conjecture constant, NUM/DEN");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle and invariant checks");
  selftest->add_flag("--mutate", o.mutate, "Corrupt the closed form to confirm the oracle catches it")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? zfr::cli::kExitOk : zfr::cli::kExitUsage;
  }

  const zfr::cli::Streams io{std::cin, std::cout, std::cerr};
  try {
    if (*gen_h) return zfr::cli::cmd_gen_h(o.k, o.delta, io);
    if (*cx) return zfr::cli::cmd_counterexample(o.k, o.delta, io);
    if (*transform) return zfr::cli::cmd_transform(o.input, io);
    if (*poly) return zfr::cli::cmd_poly(o.input, source_of(o), io);
    if (*eval) return zfr::cli::cmd_eval(o.input, o.at, source_of(o), o.float_mode, io);
    if (*roots) {
      zfr::cli::RootsRequest request;
      request.input = o.input;
      request.complex = o.complex;
      request.tol = o.tol;
      request.source = source_of(o);
      if (!o.real_interval.empty()) request.real_interval = std::make_pair(o.real_interval[0], o.real_interval[1]);
      return zfr::cli::cmd_roots(request, io);
    }
    if (*certify) {
      if (!o.verify.empty()) return zfr::cli::cmd_verify_certificate(o.verify, io);
      if (certify->count("--k") == 0 || certify->count("--delta") == 0) {
        throw zfr::cli::UsageError("certify requires --k and --delta");
      }
      return zfr::cli::cmd_certify(o.k, o.delta, o.mode, io);
    }
    if (*sweep) return zfr::cli::cmd_sweep(o.k, o.deltas, o.c, io);
    if (*selftest) return zfr::cli::cmd_selftest(o.mutate, io);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zfr::cli::kExitUsage;
  }
  return zfr::cli::kExitUsage;
}
