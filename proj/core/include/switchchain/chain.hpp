#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "switchchain/digraph.hpp"
#include "switchchain/enumeration.hpp"

namespace swc {

// Seedable, splittable 64-bit generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}
  Rng split(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL))); }
  std::uint64_t below(std::uint64_t bound);  // uniform on [0, bound)
  double uniform01();
  std::mt19937_64& engine() { return engine_; }
  std::uint64_t seed() const { return seed_; }

  static std::uint64_t mix(std::uint64_t x);  // splitmix64 finaliser

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// r-th unordered pair {a<b} of [0,m) in lex order
std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t r, std::size_t m);
std::uint64_t choose2(std::uint64_t m);

Digraph step(const Digraph& g, Rng& rng);
Digraph sample(const Digraph& g0, std::uint64_t steps, Rng& rng);

using Rational64 = boost::rational<std::int64_t>;

// Entries are integers over the common denominator C(dn,2).
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(const StateSpace& s, const Metagraph& m);

  std::size_t size() const { return neighbours_.size(); }
  std::int64_t denominator() const { return denom_; }
  const std::vector<std::size_t>& neighbours(std::size_t x) const { return neighbours_[x]; }
  std::int64_t stay_count(std::size_t x) const { return stay_[x]; }
  std::int64_t numerator(std::size_t x, std::size_t y) const;
  Rational64 entry(std::size_t x, std::size_t y) const { return {numerator(x, y), denom_}; }
  double value(std::size_t x, std::size_t y) const {
    return static_cast<double>(numerator(x, y)) / static_cast<double>(denom_);
  }

  bool symmetric() const;
  bool rows_sum_to_one() const;
  bool uniform_stationary() const;
  bool reversible() const { return symmetric(); }  // pi uniform
  std::vector<double> dense() const;               // row-major N*N
  int n() const { return n_; }
  int d() const { return d_; }

 private:
  int n_ = 0, d_ = 0;
  std::int64_t denom_ = 1;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<std::int64_t> stay_;
};

TransitionMatrix build_transition_matrix(const StateSpace& s);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double max_residual = 0.0;
  double trace = 0.0;

  double lambda0() const { return eigenvalues.front(); }
  double lambda1() const { return eigenvalues.size() > 1 ? eigenvalues[1] : 0.0; }
  double lambda_min() const { return eigenvalues.back(); }
  double lambda_star() const;
};

Spectrum spectrum(const TransitionMatrix& p);

struct MixingResult {
  int tau = 0;
  int guard = 0;                 // last t evaluated exactly
  std::vector<int> non_monotone; // t where max d_TV rose above eps after dipping below
  std::vector<double> max_dtv;   // max over starts, t = 0..guard
};

// throws InvariantViolation when the horizon is exceeded
MixingResult exact_mixing_time(const TransitionMatrix& p, const Spectrum& spec, double eps);

double spectral_mixing_bound(std::size_t N, double lambda_star, double eps);
double polynomial_mixing_bound(int n, int d, double eps);
double mixing_horizon(std::size_t N, double lambda_star, double eps);

// sigma_x as a closed walk x = s0, s1, ..., sk = x; a self-loop is {x, x}
struct OddCycleSet {
  std::vector<std::vector<std::size_t>> cycles;
  static OddCycleSet self_loops(std::size_t N);
};

struct EtaBounds {
  double eta = 0.0;
  double eta_prime = 0.0;
  int ell = 0;
  double lhs = 0.0;          // (1 + lambda_{N-1})^{-1}
  double max_inv_stay = 0.0; // max_x P(x,x)^{-1}
  bool eta_holds = false;
  bool eta_prime_holds = false;
  bool corollary_holds = false;     // lhs <= max_inv_stay / 2 when ell = 1
  bool smallest_eig_holds = false;  // lhs <= d^2 n^2 / 4
};

EtaBounds eta_bounds(const TransitionMatrix& p, const OddCycleSet& sigma, const Spectrum& spec,
                     double tol = 1e-8);

}  // namespace swc
