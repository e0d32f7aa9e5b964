#pragma once

// Subcommand implementations behind the `zfr` executable. Each returns the
// process exit code: 0 success, 1 usage or I/O error, 2 hypothesis failure.

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfr/certify.hpp"
#include "zfr/hypergraph.hpp"
#include "zfr/polynomial.hpp"

namespace zfr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitHypothesis = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Which polynomial a hypergraph input stands for.
enum class PolySource {
  ClosedForm,  // Z_{S_G} of the input G, via the subset-sum formula
  BruteForce,  // Z of the input itself, by enumerating independent sets
};

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path, std::istream& in);

int cmd_gen_h(std::size_t k, std::size_t delta, Streams io);
int cmd_counterexample(std::size_t k, std::size_t delta, Streams io);
int cmd_transform(const std::string& input, Streams io);
int cmd_poly(const std::string& input, PolySource source, Streams io);
int cmd_eval(const std::string& input, const std::string& at, PolySource source, bool float_mode, Streams io);

struct RootsRequest {
  std::string input;
  std::optional<std::pair<std::string, std::string>> real_interval;
  bool complex = false;
  std::string tol = "1e-12";
  PolySource source = PolySource::ClosedForm;
};
int cmd_roots(const RootsRequest& request, Streams io);

int cmd_certify(std::size_t k, std::size_t delta, const std::string& mode, Streams io);
int cmd_verify_certificate(const std::string& input, Streams io);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
int cmd_sweep(std::size_t k, const std::vector<std::size_t>& deltas, const std::string& c, Streams io);

struct SelftestHooks {
  /// Replaces z_sg_closed_form in the oracle comparison (mutation testing).
  std::function<IntPolynomial(const Hypergraph&)> closed_form;
};

struct SelftestResult {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_passed() const;
};

SelftestResult run_selftest(std::ostream& log, const SelftestHooks& hooks = {});
int cmd_selftest(bool mutate_closed_form, Streams io);

}  // namespace zfr::cli
