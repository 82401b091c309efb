#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "switchchain/chain.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/flow.hpp"

namespace swc {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {});
  bool ok() const;
  std::size_t failures() const;
  void append(const CheckList& other);
};

// number of derangements of n points, |Omega_{n,1}| = |Omega_{n,n-2}|
std::uint64_t derangements(int n);

CheckList check_state_space(const StateSpace& s, const Metagraph& m);
CheckList check_spectral(const TransitionMatrix& p, const Spectrum& spec, double tol = 1e-8);

struct MixingCheck {
  double eps = 0.0;
  MixingResult exact;
  double spectral = 0.0;
  double polynomial = 0.0;
};

CheckList check_mixing(const TransitionMatrix& p, const Spectrum& spec, const std::vector<double>& eps,
                       std::vector<MixingCheck>* out = nullptr);

struct PathSuiteOptions {
  PathSweepOptions sweep;
  bool encodings = true;       // Z-validity and repair at every state
  bool reverse_counts = false;  // per-state reverse-reachable bound
  bool preimages = false;      // brute-force preimage count per transition
};

struct PathSuiteStats {
  bool sampled = false;
  std::uint64_t paths = 0;
  std::uint64_t states_checked = 0;
  std::size_t max_length = 0;
  std::size_t max_interesting = 0;
  std::size_t max_repair = 0;
  std::uint64_t repair_fallbacks = 0;
  std::size_t max_reverse = 0;
  std::size_t max_preimages = 0;
  std::uint64_t preimage_cases = 0;
};

CheckList check_paths(const StateSpace& s, const PathSuiteOptions& opt, PathSuiteStats* stats = nullptr);

CheckList check_flow(const StateSpace& s, const Spectrum& spec, const PathSweepOptions& opt = {},
                     FlowAudit* audit = nullptr, BoundsReport* bounds = nullptr, double tol = 1e-8);

CheckList check_worked_example();

struct SuiteOptions {
  std::vector<double> eps = {0.25, 0.01};
  double tol = 1e-8;
  PathSweepOptions sweep;
  // limits on the brute-force encoding checks, by state count
  std::size_t reverse_count_max_states = 16;
  std::size_t preimage_max_states = 16;
};

// everything that applies to (n, d); the fixture is included
CheckList run_suite(int n, int d, const SuiteOptions& opt = {});

}  // namespace swc
