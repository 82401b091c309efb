#include "switchchain/flow.hpp"

#include <cmath>
#include <sstream>

#include "switchchain/errors.hpp"

namespace swc {

PathSweepStats sweep_paths(const StateSpace& s, const PathSweepOptions& opt,
                           const std::function<void(const PathVisit&)>& fn) {
  const std::size_t N = s.size();
  PathSweepStats st;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (a != b) st.total_pairings += count_pairings(sym_diff(s.states[a], s.states[b]));
  st.sampled = opt.force_sampled || st.total_pairings > BigInt(opt.exhaustive_limit);
  const PathOptions popt{opt.check};
  auto visit = [&](std::size_t a, std::size_t b, const Pairing& psi, const BigInt& np) {
    ++st.paths;
    PathVisit pv{a, b, &psi, nullptr, np, {}};
    PathTrace tr;
    try {
      tr = build_canonical_path(s.states[a], s.states[b], psi, popt);
      pv.trace = &tr;
    } catch (const InvariantViolation& e) {
      ++st.failures;
      pv.error = e.what();
    }
    fn(pv);
  };

  if (!st.sampled) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        if (a == b) continue;
        const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
        const BigInt np = count_pairings(h);
        for_each_pairing(h, [&](const Pairing& psi) { visit(a, b, psi, np); });
      }
    return st;
  }

  require(N >= 2, "sweep_paths: need at least two states");
  Rng rng(opt.seed);
  for (std::uint64_t k = 0; k < opt.samples; ++k) {
    const std::size_t a = rng.below(N);
    std::size_t b = rng.below(N - 1);
    if (b >= a) ++b;
    const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
    const std::uint64_t np = count_pairings_u64(h);
    const Pairing psi = pairing_at(h, rng.below(np));
    visit(a, b, psi, BigInt(np));
  }
  return st;
}

FlowAudit build_flow(const StateSpace& s, const PathSweepOptions& opt) {
  FlowAudit au;
  au.n = s.n;
  au.d = s.d;
  au.states = s.size();
  const std::size_t N = s.size();
  const BigInt n2 = BigInt(N) * BigInt(N);
  std::map<std::pair<std::size_t, std::size_t>, BigRational> pair_flow;

  PathSweepStats st = sweep_paths(s, opt, [&](const PathVisit& pv) {
    if (!pv.trace) {
      std::ostringstream os;
      os << "path " << pv.from << " -> " << pv.to << ": " << pv.error;
      au.path_failures.push_back(os.str());
      return;
    }
    const PathTrace& tr = *pv.trace;
    const BigRational fp(BigInt(1), n2 * pv.pairings);
    au.max_path_length = std::max(au.max_path_length, tr.length());
    if (!tr.simple()) {
      std::ostringstream os;
      os << "path " << pv.from << " -> " << pv.to << " revisits a state";
      au.simplicity_violations.push_back(os.str());
    }
    std::size_t prev = pv.from;
    for (std::size_t k = 1; k < tr.states.size(); ++k) {
      const std::size_t cur = s.index_of(tr.states[k]);
      au.flow[{prev, cur}] += fp;
      prev = cur;
    }
    pair_flow[{pv.from, pv.to}] += fp;
    for (const Digraph& z : tr.states) {
      BadPairReport bp = bad_pairs(s.states[pv.from], s.states[pv.to], z, *pv.psi);
      au.max_bad_pairs = std::max(au.max_bad_pairs, bp.total);
      au.bad_pair_limits_hold &= bp.within_limits;
    }
  });
  au.sampled = st.sampled;
  au.paths = st.paths;

  if (!au.sampled) {
    const BigRational target(BigInt(1), n2);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (a != b) {
          auto it = pair_flow.find({a, b});
          if (it == pair_flow.end() || it->second != target) ++au.conservation_failures;
        }
  }
  const BigInt c2 = BigInt(s.d * s.n) * BigInt(s.d * s.n - 1) / 2;
  for (const auto& [e, f] : au.flow) au.max_flow = std::max(au.max_flow, f);
  au.max_load = au.max_flow * BigRational(BigInt(N) * c2);
  return au;
}

bool BoundsReport::all_hold() const {
  for (const BoundCheck& c : checks)
    if (!c.holds) return false;
  return true;
}

BoundsReport verify_bounds(const FlowAudit& au, const Spectrum& spec, int n, int d, double tol) {
  const double N = static_cast<double>(au.states);
  const double nn = n, dd = d;
  BoundsReport r;
  const double fmax = au.max_flow.convert_to<double>();
  const double rho = au.max_load.convert_to<double>();
  const double ell = static_cast<double>(au.max_path_length);
  const double gap_inv = 1.0 / (1.0 - spec.lambda1());
  auto add = [&](const char* name, double lhs, double rhs, double slack) {
    r.checks.push_back({name, lhs, rhs, lhs <= rhs + slack});
  };
  add("load: f(e) <= 100 d^22 n^6 / N", fmax, 100.0 * std::pow(dd, 22) * std::pow(nn, 6) / N, 0.0);
  add("rho(f) <= 50 d^24 n^8", rho, 50.0 * std::pow(dd, 24) * std::pow(nn, 8), 0.0);
  add("(1-lambda1)^-1 <= rho(f) l(f)", gap_inv, rho * ell, tol);
  add("(1-lambda1)^-1 <= 50 d^25 n^9", gap_inv, 50.0 * std::pow(dd, 25) * std::pow(nn, 9), tol);
  add("l(f) <= dn", ell, dd * nn, 0.0);
  return r;
}

BadPairReport bad_pairs(const Digraph& g, const Digraph& g2, const Digraph& z, const Pairing& psi) {
  BadPairReport r;
  const ColouredDiff h = sym_diff(g, g2);
  std::map<std::pair<Vertex, bool>, BadPairReport::Entry> tally;
  for (const Arc& a : h.arcs()) {
    for (bool at_head : {true, false}) {
      const Arc b = at_head ? psi.partner_at_head(a) : psi.partner_at_tail(a);
      if (!(a < b)) continue;
      const bool ga = z.has(a), gb = z.has(b);
      if (ga != gb) continue;
      const Vertex x = at_head ? a.head : a.tail;
      auto& e = tally[{x, at_head}];
      e.vertex = x;
      e.at_head = at_head;
      (ga ? e.green : e.yellow) += 1;
      (ga ? r.green_pairs : r.yellow_pairs).emplace_back(a, b);
      ++r.total;
    }
  }
  for (const auto& [k, e] : tally) {
    r.bad.push_back(e);
    if (e.green > 2 || e.yellow > 2) r.within_limits = false;
  }
  if (r.total > 16) r.within_limits = false;
  return r;
}

namespace {

// matchings of `arcs` into pairs, tallied by number of same-colour pairs when
// each colour contributes at most two
void matchings(std::vector<bool>& colour, std::vector<bool>& used, int green, int yellow,
               std::vector<BigInt>& tally) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    tally[static_cast<std::size_t>(green + yellow)] += 1;
    return;
  }
  used[first] = true;
  for (std::size_t k = first + 1; k < used.size(); ++k) {
    if (used[k]) continue;
    int g = green, y = yellow;
    if (colour[first] == colour[k]) (colour[first] ? g : y) += 1;
    if (g > 2 || y > 2) continue;
    used[k] = true;
    matchings(colour, used, g, y, tally);
    used[k] = false;
  }
  used[first] = false;
}

}  // namespace

BigInt count_consistent_pairings(const Digraph& g, const Digraph& g2, const Digraph& z) {
  const ColouredDiff h = sym_diff(g, g2);
  const std::vector<Arc> arcs = h.arcs();
  std::vector<BigInt> total(17, 0);
  total[0] = 1;
  for (Vertex x = 0; x < g.n(); ++x)
    for (bool at_head : {true, false}) {
      std::vector<bool> colour;
      for (const Arc& a : arcs)
        if ((at_head ? a.head : a.tail) == x) colour.push_back(z.has(a));
      if (colour.empty()) continue;
      std::vector<bool> used(colour.size(), false);
      std::vector<BigInt> local(colour.size() + 1, 0);
      matchings(colour, used, 0, 0, local);
      std::vector<BigInt> next(17, 0);
      for (std::size_t t = 0; t < total.size(); ++t)
        for (std::size_t u = 0; u < local.size() && t + u <= 16; ++u) next[t + u] += total[t] * local[u];
      total = std::move(next);
    }
  BigInt sum = 0;
  for (const BigInt& v : total) sum += v;
  return sum;
}

std::string to_string(const BigRational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace swc
