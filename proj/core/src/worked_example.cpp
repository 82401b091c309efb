#include "switchchain/worked_example.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "switchchain/errors.hpp"

namespace swc {

namespace {

#include "worked_example_padding.inc"

const char* const kNames[] = {"v",   "x00", "x01", "p2",  "x10", "w2", "u2", "z00", "z01", "q2", "t2", "z10",
                              "x11", "z11", "w1",  "p1",  "q1",  "t1", "u1", "r1",  "r2",  "s1", "s2"};

struct CircuitSpec {
  const char* verts;
  bool first_blue;  // colour of the arc at position 0
};

const CircuitSpec kCircuits[] = {
    {"v x00 x01 z00 w1 w2 z10 x11 x10 v x11 x10 z11 z01 x00 x01", true},
    {"v p2 p1 z01", true},
    {"v x10 q1 q2", true},
    {"z10 x10 r1 r2", true},
    {"z10 v s2 s1", false},
    {"v w2 t1 t2", true},
    {"v u2 u1 z00", true},
};

const char* const kExpected[] = {
    "z10 x11 x10 v", "v x00 x01 z00", "v x10 z11 z01", "v w2 z10 x10", "v z00 w1 w2",
    "v z01 x00 x01", "x11 x10 z10 v", "v p2 p1 z01",   "v x10 q1 q2",  "v w2 t1 t2",
    "v u2 u1 z00",   "z10 s1 s2 v",   "z10 x10 r1 r2",
};

const char* const kZ4Interesting[][2] = {{"z10", "v"}, {"z10", "x10"}, {"v", "z01"}, {"v", "w2"}, {"v", "z00"}};

// {a.tail, a.head, b.tail, b.head}
const char* const kZ4Green[][4] = {
    {"z10", "v", "s2", "v"},    {"v", "z00", "v", "u2"},   {"v", "z01", "v", "p2"},
    {"z10", "v", "z10", "s1"},  {"x11", "x10", "z11", "x10"}, {"v", "z00", "u1", "z00"},
    {"v", "z01", "p1", "z01"},  {"w1", "w2", "z10", "w2"},
};
const char* const kZ4Yellow[][4] = {
    {"x11", "v", "x10", "v"},      {"v", "x00", "v", "x01"},     {"v", "w2", "v", "t2"},
    {"z10", "x10", "z10", "r2"},   {"z10", "x10", "r1", "x10"},  {"x01", "z00", "w1", "z00"},
    {"z11", "z01", "x00", "z01"},  {"v", "w2", "t1", "w2"},
};

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p < s.size()) {
    std::size_t q = s.find(' ', p);
    if (q == std::string::npos) q = s.size();
    if (q > p) out.push_back(s.substr(p, q - p));
    p = q + 1;
  }
  return out;
}

std::pair<Arc, Arc> ordered(Arc a, Arc b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

WorkedExample build() {
  WorkedExample ex;
  ex.names.assign(std::begin(kNames), std::end(kNames));
  const int n = static_cast<int>(ex.names.size());
  const int d = kFixtureDegree;

  std::vector<Arc> blue, red;
  for (const CircuitSpec& cs : kCircuits) {
    Circuit c;
    for (const std::string& w : split_words(cs.verts)) c.verts.push_back(ex.vertex(w));
    for (std::size_t p = 0; p < c.size(); ++p) ((p % 2 == 0) == cs.first_blue ? blue : red).push_back(c.arc_at(p));
    ex.circuits.push_back(c);
  }
  std::vector<Arc> pad;
  for (const auto& a : kFixturePadding) pad.push_back({a[0], a[1]});

  std::vector<Arc> ga = pad, g2a = pad;
  ga.insert(ga.end(), blue.begin(), blue.end());
  g2a.insert(g2a.end(), red.begin(), red.end());
  ex.g = Digraph::from_arcs(n, d, ga);
  ex.g2 = Digraph::from_arcs(n, d, g2a);
  ensure(ex.g.is_regular() && ex.g2.is_regular(), "worked example", "completion is not regular");
  ex.psi = pairing_from_circuits(sym_diff(ex.g, ex.g2), ex.circuits);

  for (const char* line : kExpected) {
    auto w = split_words(line);
    ex.expected.push_back(Switch{{ex.vertex(w[0]), ex.vertex(w[1]), ex.vertex(w[2]), ex.vertex(w[3])}});
  }
  for (const auto& a : kZ4Interesting) ex.z4_interesting.push_back({ex.vertex(a[0]), ex.vertex(a[1])});
  std::sort(ex.z4_interesting.begin(), ex.z4_interesting.end());
  auto pairs = [&](const auto& table, std::vector<std::pair<Arc, Arc>>& out) {
    for (const auto& r : table)
      out.push_back(ordered({ex.vertex(r[0]), ex.vertex(r[1])}, {ex.vertex(r[2]), ex.vertex(r[3])}));
    std::sort(out.begin(), out.end());
  };
  pairs(kZ4Green, ex.z4_green);
  pairs(kZ4Yellow, ex.z4_yellow);
  return ex;
}

}  // namespace

Vertex WorkedExample::vertex(const std::string& nm) const {
  auto it = std::find(names.begin(), names.end(), nm);
  require(it != names.end(), "WorkedExample::vertex: unknown name");
  return static_cast<Vertex>(it - names.begin());
}

std::string WorkedExample::describe(const Switch& s) const {
  return "[" + name(s.v[0]) + " " + name(s.v[1]) + " " + name(s.v[2]) + " " + name(s.v[3]) + "]";
}

const WorkedExample& worked_example() {
  static const WorkedExample ex = build();
  return ex;
}

WorkedExampleResult run_worked_example() {
  const WorkedExample& ex = worked_example();
  WorkedExampleResult r;
  r.trace = build_canonical_path(ex.g, ex.g2, ex.psi);
  const PathTrace& tr = r.trace;

  if (tr.length() != ex.expected.size())
    r.failures.push_back("expected " + std::to_string(ex.expected.size()) + " transitions, got " +
                         std::to_string(tr.length()));
  for (std::size_t k = 0; k < std::min(tr.length(), ex.expected.size()); ++k) {
    const Switch& got = tr.steps[k].sw;
    if (!got.same_move(ex.expected[k]))
      r.failures.push_back("step " + std::to_string(k + 1) + ": expected " + ex.describe(ex.expected[k]) +
                           ", got " + ex.describe(got));
  }
  if (tr.length() >= 7) {
    if (tr.steps[0].role != "eccentric") r.failures.push_back("first step is not the eccentric switch");
    std::set<int> phases;
    for (std::size_t k = 1; k < 6; ++k) phases.insert(tr.steps[k].phase);
    if (phases.size() != 3) r.failures.push_back("1-circuit does not run in three phases");
    if (tr.steps[6].role != "shortcut") r.failures.push_back("step 7 is not the shortcut switch");
  }
  if (tr.states.size() > 4) {
    std::vector<Arc> got;
    for (const LabelledArc& la : tr.steps[3].interesting) got.push_back(la.arc);
    std::sort(got.begin(), got.end());
    if (got != ex.z4_interesting) r.failures.push_back("Z4 interesting arcs differ");
    r.z4_bad = bad_pairs(ex.g, ex.g2, tr.states[4], ex.psi);
    auto green = r.z4_bad.green_pairs, yellow = r.z4_bad.yellow_pairs;
    std::sort(green.begin(), green.end());
    std::sort(yellow.begin(), yellow.end());
    if (r.z4_bad.total != 16) r.failures.push_back("Z4 has " + std::to_string(r.z4_bad.total) + " bad pairs");
    if (green != ex.z4_green) r.failures.push_back("Z4 green bad pairs differ");
    if (yellow != ex.z4_yellow) r.failures.push_back("Z4 yellow bad pairs differ");
  }
  return r;
}

}  // namespace swc
