#include "switchchain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "switchchain/encoding.hpp"
#include "switchchain/errors.hpp"
#include "switchchain/worked_example.hpp"

namespace swc {

void CheckList::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool CheckList::ok() const { return failures() == 0; }

std::size_t CheckList::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void CheckList::append(const CheckList& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::uint64_t derangements(int n) {
  std::uint64_t a = 1, b = 0;  // D(0), D(1)
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t c = static_cast<std::uint64_t>(k - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::string le(double a, double b) { return fmt(a) + " <= " + fmt(b); }

std::string first_of(const std::vector<std::string>& v) { return v.empty() ? std::string{} : v.front(); }

}  // namespace

CheckList check_state_space(const StateSpace& s, const Metagraph& m) {
  CheckList r;
  const std::size_t N = s.size();
  bool regular = true;
  for (const Digraph& g : s.states) regular &= g.is_regular() && g.n() == s.n && g.d() == s.d;
  r.add("states are d-regular digraphs", regular);
  r.add("states are distinct and sorted", std::adjacent_find(s.keys.begin(), s.keys.end(),
                                                            [](auto a, auto b) { return a >= b; }) == s.keys.end());
  if (s.d == 1 || s.d == s.n - 2) {
    const std::uint64_t want = derangements(s.n);
    r.add("|Omega| equals the derangement count", N == want, std::to_string(N) + " vs " + std::to_string(want));
  }
  r.add("metagraph connected", m.connected, "diameter " + std::to_string(m.diameter));
  bool sym = true;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y : m.adj[x]) sym &= std::binary_search(m.adj[y].begin(), m.adj[y].end(), x);
  r.add("metagraph undirected", sym);
  return r;
}

CheckList check_spectral(const TransitionMatrix& p, const Spectrum& spec, double tol) {
  CheckList r;
  r.add("P symmetric", p.symmetric());
  r.add("P rows sum to one", p.rows_sum_to_one());
  r.add("uniform distribution stationary", p.uniform_stationary());
  bool loops = true;
  for (std::size_t x = 0; x < p.size(); ++x) loops &= p.stay_count(x) > 0;
  r.add("every state has a self-loop (aperiodic)", loops);
  r.add("eigen residual <= 1e-9", spec.max_residual <= 1e-9, fmt(spec.max_residual));
  r.add("lambda_0 = 1", std::abs(spec.lambda0() - 1.0) <= tol, fmt(spec.lambda0()));
  r.add("lambda_{N-1} > -1", spec.lambda_min() > -1.0, fmt(spec.lambda_min()));
  const EtaBounds eb = eta_bounds(p, OddCycleSet::self_loops(p.size()), spec, tol);
  const double dn = static_cast<double>(p.d()) * p.n();
  r.add("(1+lambda_{N-1})^-1 <= d^2 n^2 / 4", eb.smallest_eig_holds, le(eb.lhs, dn * dn / 4.0));
  r.add("(1+lambda_{N-1})^-1 <= max P(x,x)^-1 / 2", eb.corollary_holds, le(eb.lhs, eb.max_inv_stay / 2.0));
  r.add("odd-cycle eta bound", eb.eta_holds, le(eb.lhs, eb.eta));
  return r;
}

CheckList check_mixing(const TransitionMatrix& p, const Spectrum& spec, const std::vector<double>& eps,
                       std::vector<MixingCheck>* out) {
  CheckList r;
  for (double e : eps) {
    MixingCheck mc;
    mc.eps = e;
    try {
      mc.exact = exact_mixing_time(p, spec, e);
    } catch (const InvariantViolation& ex) {
      r.add("tau(" + fmt(e) + ") within horizon", false, ex.what());
      continue;
    }
    mc.spectral = spectral_mixing_bound(p.size(), spec.lambda_star(), e);
    mc.polynomial = polynomial_mixing_bound(p.n(), p.d(), e);
    const double tau = mc.exact.tau;
    r.add("tau(" + fmt(e) + ") <= spectral bound", tau <= mc.spectral, le(tau, mc.spectral));
    r.add("tau(" + fmt(e) + ") <= polynomial bound", tau <= mc.polynomial, le(tau, mc.polynomial));
    if (out) out->push_back(std::move(mc));
  }
  return r;
}

CheckList check_paths(const StateSpace& s, const PathSuiteOptions& opt, PathSuiteStats* stats) {
  PathSuiteStats st;
  std::vector<std::string> construction, endpoints, zvalid, repairs, reverse, preimage;
  std::set<std::pair<std::uint64_t, std::uint64_t>> reverse_seen;
  using PreKey = std::tuple<std::uint64_t, std::uint64_t, std::vector<int>, PairTemplate>;
  std::set<PreKey> pre_seen;
  const double reverse_bound = 25.0 * std::pow(s.d, 6) * std::pow(s.n, 6);

  auto where = [](const PathVisit& pv, std::size_t k) {
    return "path " + std::to_string(pv.from) + " -> " + std::to_string(pv.to) + " state " + std::to_string(k);
  };

  PathSweepOptions sw = opt.sweep;
  sw.check = true;
  PathSweepStats ps = sweep_paths(s, sw, [&](const PathVisit& pv) {
    if (!pv.trace) {
      construction.push_back(pv.error);
      return;
    }
    const PathTrace& tr = *pv.trace;
    const Digraph& g = s.states[pv.from];
    const Digraph& g2 = s.states[pv.to];
    st.max_length = std::max(st.max_length, tr.length());
    for (const PathStep& step : tr.steps) st.max_interesting = std::max(st.max_interesting, step.interesting.size());
    if (tr.states.front() != g || tr.states.back() != g2) endpoints.push_back(where(pv, 0));
    for (std::size_t k = 0; k + 1 < tr.states.size(); ++k)
      if (!switch_applicable(tr.states[k], tr.steps[k].sw) || apply_switch(tr.states[k], tr.steps[k].sw) != tr.states[k + 1])
        endpoints.push_back(where(pv, k) + ": step is not a switch");
    if (!opt.encodings) return;

    const PairTemplate tmpl = opt.preimages ? pair_template(*pv.psi) : PairTemplate{};
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
      const Digraph& z = tr.states[k];
      const Encoding l = encoding_of(g, g2, z);
      ++st.states_checked;
      ValidityReport vr = check_z_valid(l, z);
      if (!vr.valid) zvalid.push_back(where(pv, k) + ": " + first_of(vr.violations));
      Digraph a;
      try {
        RepairResult rr = repair(l, z);
        st.max_repair = std::max(st.max_repair, rr.switches.size());
        if (rr.fallbacks) ++st.repair_fallbacks;
        bool dec = rr.switches.size() <= 3 && rr.bad_counts.back() == 0;
        for (std::size_t j = 0; j + 1 < rr.bad_counts.size(); ++j) dec &= rr.bad_counts[j + 1] < rr.bad_counts[j];
        if (!dec) repairs.push_back(where(pv, k) + ": " + std::to_string(rr.switches.size()) + " switches");
        if (!s.find(rr.result)) repairs.push_back(where(pv, k) + ": repair left Omega");
        a = rr.result;
      } catch (const InvariantViolation& e) {
        repairs.push_back(where(pv, k) + ": " + e.what());
        continue;
      }
      if (opt.reverse_counts && reverse_seen.insert({state_key(a), state_key(z)}).second) {
        const ReverseCount rc = count_reverse_reachable(a, z);
        st.max_reverse = std::max(st.max_reverse, rc.total);
        if (!rc.step_bounds_hold || static_cast<double>(rc.total) > reverse_bound)
          reverse.push_back(where(pv, k) + ": " + std::to_string(rc.total));
      }
      if (opt.preimages && k + 1 < tr.states.size()) {
        PreKey key{state_key(z), state_key(tr.states[k + 1]), l.entries(), tmpl};
        if (pre_seen.insert(key).second) {
          ++st.preimage_cases;
          const std::size_t c = count_preimages(s, z, tr.states[k + 1], l, tmpl);
          st.max_preimages = std::max(st.max_preimages, c);
          if (c > 4 || c == 0) preimage.push_back(where(pv, k) + ": " + std::to_string(c) + " preimages");
        }
      }
    }
  });
  st.sampled = ps.sampled;
  st.paths = ps.paths;
  if (stats) *stats = st;

  CheckList r;
  const std::string mode = std::string(ps.sampled ? "sampled" : "exhaustive") + ", " + std::to_string(ps.paths) + " paths";
  r.add("canonical paths valid (" + mode + ")", construction.empty(),
        construction.empty() ? "" : std::to_string(construction.size()) + " failures, first: " + construction.front());
  r.add("path endpoints and steps correct", endpoints.empty(), first_of(endpoints));
  r.add("path length <= dn", st.max_length <= static_cast<std::size_t>(s.d * s.n),
        le(static_cast<double>(st.max_length), s.d * s.n));
  r.add("<= 5 interesting arcs", st.max_interesting <= 5, "max " + std::to_string(st.max_interesting));
  if (opt.encodings) {
    r.add("every encoding Z-valid", zvalid.empty(),
          zvalid.empty() ? std::to_string(st.states_checked) + " states" : std::to_string(zvalid.size()) + " failures, first: " + zvalid.front());
    r.add("repair in <= 3 switches, |F| strictly decreasing", repairs.empty(),
          repairs.empty() ? "max " + std::to_string(st.max_repair) + ", " + std::to_string(st.repair_fallbacks) + " off-rule repairs"
                          : std::to_string(repairs.size()) + " failures, first: " + repairs.front());
  }
  if (opt.reverse_counts)
    r.add("reverse-reachable count <= 25 d^6 n^6", reverse.empty(),
          reverse.empty() ? "max " + std::to_string(st.max_reverse) : reverse.front());
  if (opt.preimages)
    r.add("preimages <= 4", preimage.empty(),
          preimage.empty() ? "max " + std::to_string(st.max_preimages) + " over " + std::to_string(st.preimage_cases) + " cases"
                           : preimage.front());
  return r;
}

CheckList check_flow(const StateSpace& s, const Spectrum& spec, const PathSweepOptions& opt, FlowAudit* audit,
                     BoundsReport* bounds, double tol) {
  FlowAudit au = build_flow(s, opt);
  BoundsReport br = verify_bounds(au, spec, s.n, s.d, tol);
  CheckList r;
  r.add("flow paths constructed", au.path_failures.empty(), first_of(au.path_failures));
  if (!au.sampled)
    r.add("flow conservation 1/N^2 per ordered pair", au.conservation_failures == 0,
          std::to_string(au.conservation_failures) + " failures");
  r.add("canonical paths simple", au.simplicity_violations.empty(),
        au.simplicity_violations.empty() ? "" : std::to_string(au.simplicity_violations.size()) + ", first: " +
                                                    au.simplicity_violations.front());
  r.add("bad pairs <= 16, each colour <= 2 per vertex", au.bad_pair_limits_hold,
        "max " + std::to_string(au.max_bad_pairs));
  for (const BoundCheck& c : br.checks) r.add(c.name, c.holds, le(c.lhs, c.rhs));
  if (audit) *audit = std::move(au);
  if (bounds) *bounds = std::move(br);
  return r;
}

CheckList check_worked_example() {
  CheckList r;
  try {
    WorkedExampleResult w = run_worked_example();
    r.add("worked example: 13 transitions in the stated order", w.ok(), first_of(w.failures));
  } catch (const InvariantViolation& e) {
    r.add("worked example: 13 transitions in the stated order", false, e.what());
  }
  return r;
}

CheckList run_suite(int n, int d, const SuiteOptions& opt) {
  CheckList r;
  const StateSpace s = enumerate_omega(n, d);
  const Metagraph m = build_metagraph(s);
  r.append(check_state_space(s, m));
  const TransitionMatrix p(s, m);
  const Spectrum spec = spectrum(p);
  r.append(check_spectral(p, spec, opt.tol));
  r.append(check_mixing(p, spec, opt.eps));
  PathSuiteOptions po;
  po.sweep = opt.sweep;
  po.reverse_counts = s.size() <= opt.reverse_count_max_states;
  po.preimages = s.size() <= opt.preimage_max_states;
  r.append(check_paths(s, po));
  r.append(check_flow(s, spec, opt.sweep, nullptr, nullptr, opt.tol));
  r.append(check_worked_example());
  return r;
}

}  // namespace swc
