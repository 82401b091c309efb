#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "switchchain/canonical_path.hpp"
#include "switchchain/chain.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/pairing.hpp"

namespace swc {

using BigRational = boost::multiprecision::cpp_rational;

struct PathVisit {
  std::size_t from = 0, to = 0;
  const Pairing* psi = nullptr;
  const PathTrace* trace = nullptr;
  BigInt pairings;  // |Psi(G,G')|
  std::string error;  // set, with trace == nullptr, when construction threw
};

struct PathSweepOptions {
  std::uint64_t exhaustive_limit = 10'000'000;  // total path constructions
  std::uint64_t samples = 10'000;               // used when the limit is exceeded
  std::uint64_t seed = 1;
  bool force_sampled = false;
  bool check = true;
};

struct PathSweepStats {
  bool sampled = false;
  std::uint64_t paths = 0;
  std::uint64_t failures = 0;
  BigInt total_pairings;  // sum over ordered pairs of |Psi|
};

// Every (G, G', psi) with G != G' in exhaustive mode; uniform random triples
// (pair, then pairing) otherwise.
PathSweepStats sweep_paths(const StateSpace& s, const PathSweepOptions& opt,
                           const std::function<void(const PathVisit&)>& fn);

struct FlowAudit {
  int n = 0, d = 0;
  std::size_t states = 0;
  bool sampled = false;
  std::uint64_t paths = 0;
  std::map<std::pair<std::size_t, std::size_t>, BigRational> flow;  // f(e), exact
  BigRational max_flow;
  BigRational max_load;  // rho(f)
  std::size_t max_path_length = 0;
  std::size_t conservation_failures = 0;  // ordered pairs whose path flow differs from 1/N^2
  std::vector<std::string> simplicity_violations;
  std::vector<std::string> path_failures;  // invariant violations during construction
  std::size_t max_bad_pairs = 0;
  bool bad_pair_limits_hold = true;
};

FlowAudit build_flow(const StateSpace& s, const PathSweepOptions& opt = {});

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin() const { return rhs / lhs; }
};

struct BoundsReport {
  std::vector<BoundCheck> checks;  // load, congestion, gap, path length
  bool all_hold() const;
};

BoundsReport verify_bounds(const FlowAudit& audit, const Spectrum& spec, int n, int d, double tol = 1e-8);

struct BadPairReport {
  struct Entry {
    Vertex vertex = 0;
    bool at_head = true;
    int green = 0;
    int yellow = 0;
  };
  std::vector<Entry> bad;  // vertices/orientations with at least one bad pair
  std::vector<std::pair<Arc, Arc>> green_pairs, yellow_pairs;
  std::size_t total = 0;
  bool within_limits = true;  // total <= 16, each count <= 2
};

// H = G \triangle G' coloured green if in Z and yellow otherwise
BadPairReport bad_pairs(const Digraph& g, const Digraph& g2, const Digraph& z, const Pairing& psi);

// |Psi'(H, L)|: uncoloured pairings of H consistent with the colouring by Z
BigInt count_consistent_pairings(const Digraph& g, const Digraph& g2, const Digraph& z);

std::string to_string(const BigRational& q);

}  // namespace swc
