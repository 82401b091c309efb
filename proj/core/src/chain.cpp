#include "switchchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "switchchain/errors.hpp"

namespace swc {

std::uint64_t Rng::mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound > 0, "Rng::below: bound must be positive");
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

double Rng::uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

std::uint64_t choose2(std::uint64_t m) { return m * (m - 1) / 2; }

std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t r, std::size_t m) {
  require(r < choose2(m), "unrank_pair: rank out of range");
  std::size_t a = 0;
  std::uint64_t row = m - 1;
  while (r >= row) {
    r -= row;
    ++a;
    --row;
  }
  return {a, a + 1 + static_cast<std::size_t>(r)};
}

Digraph step(const Digraph& g, Rng& rng) {
  std::vector<Arc> arcs = g.arcs();
  require(arcs.size() >= 2, "step: need at least two arcs");
  auto [a, b] = unrank_pair(rng.below(choose2(arcs.size())), arcs.size());
  if (!switch_valid(g, arcs[a], arcs[b])) return g;
  return apply_switch(g, switch_from_arcs(arcs[a], arcs[b]));
}

Digraph sample(const Digraph& g0, std::uint64_t steps, Rng& rng) {
  Digraph g = g0;
  for (std::uint64_t t = 0; t < steps; ++t) g = step(g, rng);
  return g;
}

TransitionMatrix::TransitionMatrix(const StateSpace& s, const Metagraph& m)
    : n_(s.n), d_(s.d), denom_(static_cast<std::int64_t>(choose2(static_cast<std::uint64_t>(s.n * s.d)))),
      neighbours_(m.adj), stay_(s.size(), 0) {
  for (std::size_t x = 0; x < size(); ++x)
    stay_[x] = denom_ - static_cast<std::int64_t>(neighbours_[x].size());
}

std::int64_t TransitionMatrix::numerator(std::size_t x, std::size_t y) const {
  if (x == y) return stay_[x];
  const auto& nb = neighbours_[x];
  return std::binary_search(nb.begin(), nb.end(), y) ? 1 : 0;
}

bool TransitionMatrix::symmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y : neighbours_[x])
      if (numerator(y, x) != numerator(x, y)) return false;
  return true;
}

bool TransitionMatrix::rows_sum_to_one() const {
  for (std::size_t x = 0; x < size(); ++x) {
    std::int64_t s = stay_[x];
    for (std::size_t y : neighbours_[x]) s += numerator(x, y);
    if (s != denom_ || stay_[x] < 0) return false;
  }
  return true;
}

bool TransitionMatrix::uniform_stationary() const {
  std::vector<std::int64_t> col(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    col[x] += stay_[x];
    for (std::size_t y : neighbours_[x]) col[y] += numerator(x, y);
  }
  return std::all_of(col.begin(), col.end(), [&](std::int64_t c) { return c == denom_; });
}

std::vector<double> TransitionMatrix::dense() const {
  const std::size_t N = size();
  std::vector<double> out(N * N, 0.0);
  for (std::size_t x = 0; x < N; ++x) {
    out[x * N + x] = value(x, x);
    for (std::size_t y : neighbours_[x]) out[x * N + y] = value(x, y);
  }
  return out;
}

TransitionMatrix build_transition_matrix(const StateSpace& s) {
  return TransitionMatrix(s, build_metagraph(s));
}

double Spectrum::lambda_star() const { return std::max(lambda1(), std::abs(lambda_min())); }

Spectrum spectrum(const TransitionMatrix& p) {
  if (!p.symmetric()) throw ContractError("spectrum: transition matrix is not symmetric");
  const auto N = static_cast<Eigen::Index>(p.size());
  std::vector<double> raw = p.dense();
  Eigen::MatrixXd m = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(raw.data(), N, N);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw InvariantViolation("spectrum", "eigensolver did not converge");

  Spectrum out;
  out.trace = m.trace();
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::MatrixXd& vecs = es.eigenvectors();
  for (Eigen::Index k = 0; k < N; ++k) {
    double r = (m * vecs.col(k) - ev(k) * vecs.col(k)).norm();
    out.max_residual = std::max(out.max_residual, r);
  }
  out.eigenvalues.assign(ev.data(), ev.data() + N);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double spectral_mixing_bound(std::size_t N, double lambda_star, double eps) {
  return (std::log(static_cast<double>(N)) + std::log(1.0 / eps)) / (1.0 - lambda_star);
}

double polynomial_mixing_bound(int n, int d, double eps) {
  require(n >= 4 && d >= 1 && d <= n - 1, "polynomial_mixing_bound: need n >= 4 and 1 <= d <= n-1");
  require(eps > 0.0 && eps < 1.0, "polynomial_mixing_bound: need 0 < eps < 1");
  const double dn = static_cast<double>(d) * n;
  return 50.0 * std::pow(d, 25) * std::pow(n, 9) * (dn * std::log(dn) + std::log(1.0 / eps));
}

double mixing_horizon(std::size_t N, double lambda_star, double eps) {
  return 64.0 / (1.0 - lambda_star) * std::log(static_cast<double>(N) / eps);
}

MixingResult exact_mixing_time(const TransitionMatrix& p, const Spectrum& spec, double eps) {
  require(eps > 0.0 && eps < 1.0, "exact_mixing_time: need 0 < eps < 1");
  const std::size_t N = p.size();
  const double ls = spec.lambda_star();
  if (ls >= 1.0 - 1e-12) throw InvariantViolation("mixing horizon", "chain is not ergodic");

  // beyond `guard` the spectral tail bound 1/2 sqrt(N-1) lambda*^t is at most eps
  const double slack_ls = std::min(1.0 - 1e-15, ls + 1e-10);
  const double c = 0.5 * std::sqrt(static_cast<double>(N) - 1.0);
  int guard = 0;
  if (c > eps) guard = slack_ls <= 0.0 ? 1 : static_cast<int>(std::ceil(std::log(eps / c) / std::log(slack_ls)));
  const double horizon = mixing_horizon(N, ls, eps);
  if (guard > horizon)
    throw InvariantViolation("mixing horizon", "guard " + std::to_string(guard) + " exceeds horizon");

  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t x = 0; x < N; ++x) {
    trip.emplace_back(x, x, p.value(x, x));
    for (std::size_t y : p.neighbours(x)) trip.emplace_back(x, y, p.value(x, y));
  }
  Eigen::SparseMatrix<double> P(N, N);
  P.setFromTriplets(trip.begin(), trip.end());
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(N, N);
  const double pi = 1.0 / static_cast<double>(N);

  MixingResult res;
  res.guard = guard;
  int last_bad = -1;
  bool dipped = false;
  for (int t = 0; t <= guard; ++t) {
    if (t > 0) M = M * P;
    double worst = 0.0;
    for (std::size_t x = 0; x < N; ++x) worst = std::max(worst, 0.5 * (M.row(x).array() - pi).abs().sum());
    res.max_dtv.push_back(worst);
    if (worst > eps) {
      if (dipped) res.non_monotone.push_back(t);
      last_bad = t;
    } else {
      dipped = true;
    }
  }
  res.tau = last_bad + 1;
  return res;
}

OddCycleSet OddCycleSet::self_loops(std::size_t N) {
  OddCycleSet s;
  for (std::size_t x = 0; x < N; ++x) s.cycles.push_back({x, x});
  return s;
}

EtaBounds eta_bounds(const TransitionMatrix& p, const OddCycleSet& sigma, const Spectrum& spec, double tol) {
  const std::size_t N = p.size();
  require(sigma.cycles.size() == N, "eta_bounds: need one cycle per state");
  const double pi = 1.0 / static_cast<double>(N);
  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> load;  // (eta sum, eta' sum)
  EtaBounds b;
  for (std::size_t x = 0; x < N; ++x) {
    const auto& cyc = sigma.cycles[x];
    require(cyc.size() >= 2 && cyc.front() == x && cyc.back() == x, "eta_bounds: cycle must start and end at x");
    const int len = static_cast<int>(cyc.size()) - 1;
    require(len % 2 == 1, "eta_bounds: cycle length must be odd");
    b.ell = std::max(b.ell, len);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
      std::size_t a = cyc[k], c = cyc[k + 1];
      require(p.numerator(a, c) > 0, "eta_bounds: cycle uses a non-edge");
      edges.emplace_back(std::min(a, c), std::max(a, c));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
      load[e].first += len * pi;
      load[e].second += pi;
    }
  }
  for (const auto& [e, s] : load) {
    const double q = pi * p.value(e.first, e.second);
    b.eta = std::max(b.eta, s.first / q);
    b.eta_prime = std::max(b.eta_prime, s.second / q);
  }
  for (std::size_t x = 0; x < N; ++x) b.max_inv_stay = std::max(b.max_inv_stay, 1.0 / p.value(x, x));
  b.lhs = 1.0 / (1.0 + spec.lambda_min());
  b.eta_holds = b.lhs <= b.eta / 2.0 + tol;
  b.eta_prime_holds = b.lhs <= b.eta_prime * b.ell / 2.0 + tol;
  b.corollary_holds = b.lhs <= b.max_inv_stay / 2.0 + tol;
  const double dn = static_cast<double>(p.d()) * p.n();
  b.smallest_eig_holds = b.lhs <= dn * dn / 4.0 + tol;
  return b;
}

}  // namespace swc
