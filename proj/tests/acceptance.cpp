// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "switchchain/chain.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/errors.hpp"
#include "switchchain/verify.hpp"

using namespace swc;

namespace {

struct Instance {
  int n, d;
};

constexpr Instance kInstances[] = {{4, 1}, {5, 1}, {6, 1}, {4, 2}, {5, 2}};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::string tag(const Instance& in) { return "(" + std::to_string(in.n) + "," + std::to_string(in.d) + ")"; }

CheckList prefixed(const CheckList& cl, const std::string& p) {
  CheckList out;
  for (const Check& c : cl.checks) out.add(p + " " + c.name, c.pass, c.detail);
  return out;
}

int failures = 0;

void report(int k, const std::string& title, const CheckList& cl, double secs, const std::string& extra = {}) {
  const bool ok = cl.ok() && !cl.checks.empty();
  failures += !ok;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << cl.checks.size()
            << " checks, " << buf << (extra.empty() ? "" : ", " + extra) << "]\n";
  for (const Check& c : cl.checks)
    if (!c.pass) std::cout << "    failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  std::cout.flush();
}

bool is_encoding_check(const std::string& name) {
  for (const char* k : {"encoding", "repair", "reverse-reachable", "preimages"})
    if (name.find(k) != std::string::npos) return true;
  return false;
}

}  // namespace

int main() {
  struct Built {
    Instance in;
    StateSpace s;
    TransitionMatrix p;
    Spectrum spec;
  };
  std::vector<Built> built;

  // 1
  {
    Timer t;
    CheckList cl;
    const std::size_t expected[] = {9, 44, 265, 9, 216};
    std::size_t k = 0;
    for (const Instance& in : kInstances) {
      StateSpace s = enumerate_omega(in.n, in.d);
      const Metagraph m = build_metagraph(s);
      cl.add(tag(in) + " |Omega| = " + std::to_string(expected[k]), s.size() == expected[k], std::to_string(s.size()));
      cl.append(prefixed(check_state_space(s, m), tag(in)));
      TransitionMatrix p(s, m);
      built.push_back({in, std::move(s), std::move(p), {}});
      ++k;
    }
    cl.add("runtime < 60 s", t.secs() < 60.0);
    report(1, "enumeration counts and metagraph connectivity", cl, t.secs());
  }

  // 2
  {
    Timer t;
    CheckList cl;
    for (Built& b : built) {
      b.spec = spectrum(b.p);
      cl.append(prefixed(check_spectral(b.p, b.spec, 1e-8), tag(b.in)));
    }
    report(2, "spectral properties and smallest-eigenvalue bounds", cl, t.secs());
  }

  // 3
  double tau41 = -1;
  {
    Timer t;
    CheckList cl;
    for (const Built& b : built) {
      std::vector<MixingCheck> mc;
      cl.append(prefixed(check_mixing(b.p, b.spec, {0.25, 0.01}, &mc), tag(b.in)));
      if (b.in.n == 4 && b.in.d == 1)
        for (const MixingCheck& m : mc)
          if (m.eps == 0.01) tau41 = m.exact.tau;
    }
    report(3, "exact mixing time within both bounds, eps in {0.25, 0.01}", cl, t.secs());
  }

  // 4 and 5 share one sweep per instance
  {
    Timer t;
    CheckList paths, enc;
    std::string stats;
    for (const Built& b : built) {
      const bool exhaustive = (b.in.n == 4);
      if (!exhaustive && !(b.in.n == 5 && b.in.d == 2)) continue;
      PathSuiteOptions po;
      po.sweep.seed = 20240601;
      po.sweep.samples = 10'000;
      po.sweep.force_sampled = !exhaustive;
      po.reverse_counts = exhaustive;
      po.preimages = b.in.n == 4 && b.in.d == 1;
      PathSuiteStats st;
      const CheckList cl = check_paths(b.s, po, &st);
      for (const Check& c : cl.checks) (is_encoding_check(c.name) ? enc : paths).add(tag(b.in) + " " + c.name, c.pass, c.detail);
      if (st.sampled) paths.add(tag(b.in) + " at least 10^4 sampled pairings", st.paths >= 10'000, std::to_string(st.paths));
      stats += tag(b.in) + " " + std::to_string(st.paths) + " paths ";
    }
    paths.add("runtime < 600 s", t.secs() < 600.0);
    report(4, "canonical paths", paths, t.secs(), stats);
    report(5, "encodings, repair, reverse counts, preimages", enc, t.secs());
  }

  // 6
  {
    Timer t;
    CheckList cl;
    for (const Built& b : built)
      if (b.in.n == 4) cl.append(prefixed(check_flow(b.s, b.spec), tag(b.in)));
    report(6, "multicommodity flow", cl, t.secs());
  }

  // 7
  {
    Timer t;
    report(7, "worked example fixture", check_worked_example(), t.secs());
  }

  // 8
  {
    Timer t;
    CheckList cl;
    const Built& b = built.front();
    const std::uint64_t steps = static_cast<std::uint64_t>(10 * tau41);
    const std::size_t trajectories = 100'000;
    std::vector<std::uint64_t> counts(b.s.size(), 0);
    const Rng root(8);
    const Digraph start = circulant(4, 1);
    for (std::size_t k = 0; k < trajectories; ++k) {
      Rng rng = root.split(k);
      ++counts[b.s.index_of(sample(start, steps, rng))];
    }
    const double expect = static_cast<double>(trajectories) / static_cast<double>(b.s.size());
    double stat = 0.0;
    for (std::uint64_t c : counts) stat += (c - expect) * (c - expect) / expect;
    const boost::math::chi_squared dist(static_cast<double>(b.s.size() - 1));
    const double pvalue = boost::math::cdf(boost::math::complement(dist, stat));
    cl.add("T = 10 tau(0.01) = " + std::to_string(steps), tau41 > 0);
    cl.add("chi-square p-value >= 0.001", pvalue >= 0.001,
           "chi2 = " + std::to_string(stat) + ", p = " + std::to_string(pvalue));
    char buf[64];
    std::snprintf(buf, sizeof buf, "chi2 %.3f, p %.4f", stat, pvalue);
    report(8, "sampler uniformity on (4,1), 10^5 trajectories", cl, t.secs(), buf);
  }

  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
