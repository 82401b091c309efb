#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "switchchain/canonical_path.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/worked_example.hpp"
#include "switchchain/zoo.hpp"

using namespace swc;

namespace {

template <class Fn>
void all_paths(const StateSpace& s, Fn fn) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
      for_each_pairing(h, [&](const Pairing& p) { fn(s.states[a], s.states[b], p); });
    }
}

}  // namespace

TEST_CASE("worked example") {
  const WorkedExample& ex = worked_example();
  CHECK(ex.names.size() == 23);
  CHECK(sym_diff(ex.g, ex.g2).balanced());
  REQUIRE(ex.circuits.size() == 7);
  CHECK(ex.circuits[0].size() == 16);

  const auto circuits = decompose_circuits(sym_diff(ex.g, ex.g2), ex.psi);
  REQUIRE(circuits.size() == ex.circuits.size());
  // same circuits; the 4-cycles through w2, u2 come before the two at z10 when processed
  auto sorted_arcs = [](const std::vector<Circuit>& cs) {
    std::vector<std::vector<Arc>> out;
    for (const Circuit& c : cs) {
      auto a = c.arcs();
      std::sort(a.begin(), a.end());
      out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(sorted_arcs(circuits) == sorted_arcs(ex.circuits));
  for (std::size_t k = 0; k < 3; ++k) CHECK(circuits[k].arcs() == ex.circuits[k].arcs());
  CHECK(circuits[3].verts.front() == ex.vertex("v"));
  CHECK(circuits[4].verts.front() == ex.vertex("v"));
  CHECK(circuits[5].verts.front() == ex.vertex("z10"));
  CHECK(circuits[6].verts.front() == ex.vertex("z10"));

  const auto segs = split_raw_segments(ex.circuits[0]);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].kind == RawKind::TwoCircuit);
  CHECK(classify_two_circuit(segs[0].s, ex.g) == TwoCircuitClass::Eccentric);

  const WorkedExampleResult r = run_worked_example();
  for (const std::string& f : r.failures) INFO(f);
  CHECK(r.ok());
  CHECK(r.trace.length() == 13);
  CHECK(r.trace.states.back() == ex.g2);
  CHECK(r.trace.steps[3].interesting.size() == 5);
  CHECK(r.z4_bad.total == 16);
  CHECK(r.z4_bad.within_limits);
  CHECK(r.trace.simple());
}

TEST_CASE("fixture files match the embedded completion") {
  const WorkedExample& ex = worked_example();
  std::ifstream g(SWC_TEST_DATA "/fixture_G.txt"), g2(SWC_TEST_DATA "/fixture_G2.txt");
  REQUIRE(g);
  REQUIRE(g2);
  CHECK(read_digraph(g) == ex.g);
  CHECK(read_digraph(g2) == ex.g2);
  CHECK(ex.g.d() == 5);
}

TEST_CASE("exhaustive canonical paths on small instances") {
  for (auto [n, d] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 1}}) {
    CAPTURE(n);
    CAPTURE(d);
    const StateSpace s = enumerate_omega(n, d);
    std::size_t paths = 0, bad = 0;
    all_paths(s, [&](const Digraph& g, const Digraph& g2, const Pairing& p) {
      ++paths;
      const PathTrace tr = build_canonical_path(g, g2, p);
      bool ok = tr.states.front() == g && tr.states.back() == g2 && tr.simple();
      ok &= tr.length() <= static_cast<std::size_t>(d * n);
      for (std::size_t k = 0; k < tr.length(); ++k) {
        ok &= apply_switch(tr.states[k], tr.steps[k].sw) == tr.states[k + 1];
        ok &= s.find(tr.states[k + 1]).has_value();
        ok &= tr.steps[k].interesting.size() <= 5;
        ok &= match_zoo(tr.steps[k].interesting).has_value();
      }
      bad += !ok;
    });
    CHECK(paths > 0);
    CHECK(bad == 0);
  }
}

TEST_CASE("a circuit meeting its start once is a single 1-circuit") {
  const StateSpace s = enumerate_omega(5, 1);
  std::size_t seen = 0;
  all_paths(s, [&](const Digraph& g, const Digraph& g2, const Pairing& p) {
    for (const Circuit& c : decompose_circuits(sym_diff(g, g2), p)) {
      std::size_t occ = 0;
      for (Vertex x : c.verts) occ += x == c.verts.front();
      if (occ != 1) continue;
      ++seen;
      const auto segs = split_raw_segments(c);
      REQUIRE(segs.size() == 1);
      CHECK(segs[0].kind == RawKind::OneCircuit);
    }
  });
  CHECK(seen > 0);
}

TEST_CASE("triangle processing on (6,1)") {
  const StateSpace s = enumerate_omega(6, 1);
  std::map<std::string, std::size_t> steps_by_kind, segments_by_kind;
  for (std::size_t a = 0; a < s.size(); a += 7)
    for (std::size_t b = 0; b < s.size(); b += 5) {
      if (a == b) continue;
      const ColouredDiff h = sym_diff(s.states[a], s.states[b]);
      const PathTrace tr = build_canonical_path(s.states[a], s.states[b], pairing_at(h, 0));
      std::map<std::size_t, std::string> seg_kind;
      for (const PathStep& st : tr.steps) {
        ++steps_by_kind[st.kind];
        seg_kind[st.segment] = st.kind;
      }
      for (const auto& [seg, kind] : seg_kind) ++segments_by_kind[kind];
    }
  // T2 always uses four transitions, T1 three
  REQUIRE(segments_by_kind.count("triangle/T2"));
  CHECK(steps_by_kind["triangle/T2"] == 4 * segments_by_kind["triangle/T2"]);
  if (segments_by_kind.count("triangle/T1"))
    CHECK(steps_by_kind["triangle/T1"] == 3 * segments_by_kind["triangle/T1"]);
}

TEST_CASE("zoo catalogue") {
  CHECK(zoo_catalogue().size() == 8);
  CHECK(match_zoo({}).has_value());
  // single arcs of either label
  CHECK(match_zoo({{{0, 1}, -1}}).has_value());
  CHECK(match_zoo({{{0, 1}, 2}}).has_value());
  // six bad arcs never match
  std::vector<LabelledArc> six;
  for (int k = 1; k <= 6; ++k) six.push_back({{0, k}, -1});
  CHECK_FALSE(match_zoo(six).has_value());
}

TEST_CASE("merged zoo shapes agree with a brute-force quotient count") {
  // identify non-hub vertices by every map to canonical labels, keeping
  // proper quotients without loops or repeated arcs
  std::size_t expected = 0;
  for (const ZooShape& shape : zoo_catalogue()) {
    const int m = shape.vertices - 1;
    std::set<std::vector<int>> parts;
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    while (true) {
      std::map<int, int> relabel;
      std::vector<int> canon;
      for (int x : f) canon.push_back(relabel.emplace(x, static_cast<int>(relabel.size())).first->second);
      parts.insert(canon);
      int k = 0;
      while (k < m && ++f[static_cast<std::size_t>(k)] == m) f[static_cast<std::size_t>(k++)] = 0;
      if (k == m) break;
    }
    for (const auto& p : parts) {
      if (std::set<int>(p.begin(), p.end()).size() == static_cast<std::size_t>(m)) continue;
      auto img = [&](int x) { return x == 0 ? 0 : p[static_cast<std::size_t>(x - 1)] + 1; };
      std::set<std::pair<int, int>> arcs;
      bool ok = true;
      for (const ShapeArc& a : shape.arcs) {
        const int t = img(a.tail), h = img(a.head);
        ok &= t != h && arcs.insert({t, h}).second;
      }
      expected += ok;
    }
  }
  CHECK(zoo_merged_shapes().size() == expected);
  for (const ZooShape& q : zoo_merged_shapes()) CHECK(q.vertices >= 2);
}
