#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "switchchain/canonical_path.hpp"
#include "switchchain/chain.hpp"
#include "switchchain/digraph.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/errors.hpp"
#include "switchchain/flow.hpp"
#include "switchchain/pairing.hpp"
#include "switchchain/verify.hpp"
#include "switchchain/worked_example.hpp"

using nlohmann::json;
using namespace swc;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kUsage = 2, kCap = 3 };

struct Config {
  int n = 4;
  int d = 1;
  std::vector<double> eps;
  std::uint64_t seed = 1;
  std::uint64_t steps = 0;
  std::uint64_t samples = 10'000;
  double tol = 1e-8;
  bool sampled = false;
  bool all_eigenvalues = false;
  bool all_pairings = false;
  std::uint64_t pairing = 0;
  std::string start, out, g_file, g2_file;
};

void check_range(const Config& c) {
  if (c.n < 4 || c.n > kMaxVertices || c.d < 1 || c.d > c.n - 1)
    throw ContractError("need 4 <= n <= " + std::to_string(kMaxVertices) + " and 1 <= d <= n-1");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json arc_json(Arc a) { return json::array({a.tail + 1, a.head + 1}); }
json switch_json(const Switch& s) { return json::array({s.v[0] + 1, s.v[1] + 1, s.v[2] + 1, s.v[3] + 1}); }

json rational_json(const BigRational& q) {
  return {{"numerator", numerator(q).str()},
          {"denominator", denominator(q).str()},
          {"value", q.convert_to<double>()}};
}

json trace_json(const PathTrace& tr) {
  json steps = json::array();
  for (const PathStep& st : tr.steps) {
    json ia = json::array();
    for (const LabelledArc& la : st.interesting) ia.push_back({{"arc", arc_json(la.arc)}, {"label", la.label}});
    steps.push_back({{"switch", switch_json(st.sw)},
                     {"stepType", to_string(st.type)},
                     {"segmentKind", st.kind},
                     {"role", st.role},
                     {"interestingArcs", ia}});
  }
  return steps;
}

json checks_json(const CheckList& cl) {
  json a = json::array();
  for (const Check& c : cl.checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  return read_digraph(in);
}

void save(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ContractError("cannot write " + path);
  os << text;
}

int cmd_sample(const Config& c) {
  check_range(c);
  Digraph g0 = c.start.empty() ? circulant(c.n, c.d) : load_digraph(c.start);
  if (g0.n() != c.n || g0.d() != c.d) throw ContractError("start digraph does not match --n/--d");
  std::uint64_t steps = c.steps;
  if (steps == 0) steps = static_cast<std::uint64_t>(std::ceil(10.0 * c.d * c.n * std::log(static_cast<double>(c.d * c.n) + 1.0)));
  Rng rng(c.seed);
  const Digraph g = sample(g0, steps, rng);
  json j{{"n", c.n}, {"d", c.d}, {"seed", c.seed}, {"steps", steps}};
  if (c.out.empty())
    j["digraph"] = to_text(g);
  else {
    save(c.out, to_text(g));
    j["out"] = c.out;
  }
  emit(j);
  return kOk;
}

int cmd_enumerate(const Config& c) {
  check_range(c);
  const StateSpace s = enumerate_omega(c.n, c.d);
  const Metagraph m = build_metagraph(s);
  if (!c.out.empty()) {
    std::ostringstream os;
    os << "OMEGA " << c.n << ' ' << c.d << ' ' << s.size() << '\n';
    for (const Digraph& g : s.states) write_digraph(os, g);
    save(c.out, os.str());
  }
  emit({{"n", c.n}, {"d", c.d}, {"count", s.size()}, {"connected", m.connected}, {"diameter", m.diameter}});
  return kOk;
}

int cmd_spectrum(const Config& c) {
  check_range(c);
  const StateSpace s = enumerate_omega(c.n, c.d);
  const TransitionMatrix p(s, build_metagraph(s));
  const Spectrum sp = spectrum(p);
  json j{{"n", c.n},
         {"d", c.d},
         {"N", s.size()},
         {"lambda0", sp.lambda0()},
         {"lambda1", sp.lambda1()},
         {"lambdaMin", sp.lambda_min()},
         {"lambdaStar", sp.lambda_star()},
         {"symmetric", p.symmetric()},
         {"uniformStationary", p.uniform_stationary()},
         {"maxResidual", sp.max_residual}};
  if (c.all_eigenvalues) j["eigenvalues"] = sp.eigenvalues;
  emit(j);
  return kOk;
}

int cmd_mixing(const Config& c) {
  check_range(c);
  const std::vector<double> eps = c.eps.empty() ? std::vector<double>{0.25, 0.01} : c.eps;
  for (double e : eps)
    if (!(e > 0.0 && e < 1.0)) throw ContractError("--eps must lie in (0,1)");
  const StateSpace s = enumerate_omega(c.n, c.d);
  const TransitionMatrix p(s, build_metagraph(s));
  const Spectrum sp = spectrum(p);
  json results = json::array();
  for (double e : eps) {
    const MixingResult mr = exact_mixing_time(p, sp, e);
    results.push_back({{"eps", e},
                       {"tauExact", mr.tau},
                       {"tauLemma1", spectral_mixing_bound(s.size(), sp.lambda_star(), e)},
                       {"tauTheorem1", polynomial_mixing_bound(c.n, c.d, e)}});
  }
  json j{{"n", c.n}, {"d", c.d}, {"N", s.size()}, {"lambdaStar", sp.lambda_star()}, {"results", results}};
  if (results.size() == 1)
    for (const char* k : {"eps", "tauExact", "tauLemma1", "tauTheorem1"}) j[k] = results[0][k];
  emit(j);
  return kOk;
}

int cmd_path(const Config& c) {
  const Digraph g = load_digraph(c.g_file), g2 = load_digraph(c.g2_file);
  if (g.n() != g2.n() || g.d() != g2.d()) throw ContractError("digraphs differ in n or d");
  const ColouredDiff h = sym_diff(g, g2);
  const std::uint64_t count = count_pairings_u64(h);
  if (!c.all_pairings && c.pairing >= count) throw ContractError("--pairing out of range");
  json paths = json::array();
  bool ok = true;
  auto one = [&](std::uint64_t idx, const Pairing& psi) {
    const PathTrace tr = build_canonical_path(g, g2, psi);
    ok &= tr.simple();
    paths.push_back({{"pairing", idx}, {"length", tr.length()}, {"simple", tr.simple()}, {"trace", trace_json(tr)}});
  };
  if (c.all_pairings) {
    std::uint64_t idx = 0;
    for_each_pairing(h, [&](const Pairing& psi) { one(idx++, psi); });
  } else {
    one(c.pairing, pairing_at(h, c.pairing));
  }
  emit({{"n", g.n()}, {"d", g.d()}, {"pairings", count}, {"paths", paths}});
  return ok ? kOk : kInvariant;
}

int cmd_flow_audit(const Config& c) {
  check_range(c);
  const StateSpace s = enumerate_omega(c.n, c.d);
  const TransitionMatrix p(s, build_metagraph(s));
  const Spectrum sp = spectrum(p);
  PathSweepOptions opt;
  opt.seed = c.seed;
  opt.samples = c.samples;
  opt.force_sampled = c.sampled;
  const FlowAudit au = build_flow(s, opt);
  const BoundsReport br = verify_bounds(au, sp, c.n, c.d, c.tol);
  json bounds = json::array();
  for (const BoundCheck& b : br.checks)
    bounds.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"margin", b.margin()}, {"holds", b.holds}});
  const bool ok = br.all_hold() && au.simplicity_violations.empty() && au.path_failures.empty() &&
                  au.bad_pair_limits_hold && (au.sampled || au.conservation_failures == 0);
  emit({{"n", c.n},
        {"d", c.d},
        {"ok", ok},
        {"maxLoad", rational_json(au.max_load)},
        {"maxFlow", rational_json(au.max_flow)},
        {"bounds", bounds},
        {"counts",
         {{"states", au.states},
          {"paths", au.paths},
          {"sampled", au.sampled},
          {"transitionsWithFlow", au.flow.size()},
          {"maxPathLength", au.max_path_length},
          {"conservationFailures", au.conservation_failures},
          {"simplicityViolations", au.simplicity_violations.size()},
          {"pathFailures", au.path_failures.size()},
          {"maxBadPairs", au.max_bad_pairs}}}});
  return ok ? kOk : kInvariant;
}

int cmd_verify(const Config& c) {
  check_range(c);
  SuiteOptions opt;
  if (!c.eps.empty()) opt.eps = c.eps;
  opt.tol = c.tol;
  opt.sweep.seed = c.seed;
  opt.sweep.samples = c.samples;
  opt.sweep.force_sampled = c.sampled;
  const CheckList cl = run_suite(c.n, c.d, opt);
  emit({{"n", c.n}, {"d", c.d}, {"ok", cl.ok()}, {"failures", cl.failures()}, {"checks", checks_json(cl)}});
  return cl.ok() ? kOk : kInvariant;
}

int cmd_fixture(const Config&) {
  const WorkedExample& ex = worked_example();
  const WorkedExampleResult r = run_worked_example();
  json steps = json::array();
  for (const PathStep& st : r.trace.steps)
    steps.push_back({{"switch", ex.describe(st.sw)}, {"segmentKind", st.kind}, {"role", st.role}, {"phase", st.phase}});
  json z4 = json::array();
  if (r.trace.steps.size() > 3)
    for (const LabelledArc& la : r.trace.steps[3].interesting)
      z4.push_back({{"arc", ex.name(la.arc.tail) + " " + ex.name(la.arc.head)}, {"label", la.label}});
  emit({{"ok", r.ok()},
        {"transitions", r.trace.length()},
        {"steps", steps},
        {"z4InterestingArcs", z4},
        {"z4BadPairs", r.z4_bad.total},
        {"failures", r.failures}});
  return r.ok() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"switch chain on d-regular digraphs"};
  app.require_subcommand(1);
  Config c;

  auto chain_opts = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of vertices")->required();
    sub->add_option("--d", c.d, "degree")->required();
  };
  CLI::App* sample = app.add_subcommand("sample", "run the chain and write the final digraph");
  chain_opts(sample);
  sample->add_option("--seed", c.seed);
  sample->add_option("--steps", c.steps, "number of steps (default 10 dn log(dn+1))");
  sample->add_option("--start", c.start, "start digraph file (default circulant)");
  sample->add_option("--out", c.out);

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate the state space");
  chain_opts(enumerate);
  enumerate->add_option("--out", c.out, "state space cache file");

  CLI::App* spec = app.add_subcommand("spectrum", "eigenvalues of the transition matrix");
  chain_opts(spec);
  spec->add_flag("--all", c.all_eigenvalues, "include every eigenvalue");

  CLI::App* mixing = app.add_subcommand("mixing", "exact mixing time against the bounds");
  chain_opts(mixing);
  mixing->add_option("--eps", c.eps, "tolerance(s), default 0.25 0.01");

  CLI::App* path = app.add_subcommand("path", "canonical path between two digraphs");
  path->add_option("g", c.g_file, "start digraph file")->required()->check(CLI::ExistingFile);
  path->add_option("g2", c.g2_file, "end digraph file")->required()->check(CLI::ExistingFile);
  auto* pi = path->add_option("--pairing", c.pairing, "pairing index");
  path->add_flag("--all-pairings", c.all_pairings)->excludes(pi);

  CLI::App* flow = app.add_subcommand("flow-audit", "multicommodity flow and its bounds");
  chain_opts(flow);
  flow->add_option("--seed", c.seed);
  flow->add_option("--samples", c.samples);
  flow->add_flag("--sampled", c.sampled, "sample paths even when exhaustive is feasible");
  flow->add_option("--tol", c.tol);

  CLI::App* verify = app.add_subcommand("verify", "full check suite");
  chain_opts(verify);
  verify->add_option("--eps", c.eps);
  verify->add_option("--seed", c.seed);
  verify->add_option("--samples", c.samples);
  verify->add_flag("--sampled", c.sampled);
  verify->add_option("--tol", c.tol);

  CLI::App* fixture = app.add_subcommand("fixture", "23-vertex worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*sample) return cmd_sample(c);
    if (*enumerate) return cmd_enumerate(c);
    if (*spec) return cmd_spectrum(c);
    if (*mixing) return cmd_mixing(c);
    if (*path) return cmd_path(c);
    if (*flow) return cmd_flow_audit(c);
    if (*verify) return cmd_verify(c);
    if (*fixture) return cmd_fixture(c);
  } catch (const CapExceeded& e) {
    emit({{"error", "cap exceeded"}, {"detail", e.what()}});
    return kCap;
  } catch (const InvariantViolation& e) {
    emit({{"error", "invariant violation"}, {"property", e.property()}, {"detail", e.what()}});
    return kInvariant;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
