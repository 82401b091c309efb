#include "switchchain/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "switchchain/canonical_path.hpp"
#include "switchchain/errors.hpp"

namespace swc {

bool Encoding::sums_ok() const {
  for (Vertex a = 0; a < n_; ++a) {
    int r = 0, c = 0;
    for (Vertex b = 0; b < n_; ++b) {
      r += at(a, b);
      c += at(b, a);
    }
    if (r != d_ || c != d_) return false;
  }
  return true;
}

bool Encoding::entries_in_range() const {
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = 0; b < n_; ++b) {
      int x = at(a, b);
      if (x < -1 || x > 2 || (a == b && x != 0)) return false;
    }
  return true;
}

std::vector<LabelledArc> Encoding::bad_arcs() const {
  std::vector<LabelledArc> out;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = 0; b < n_; ++b)
      if (at(a, b) == -1 || at(a, b) == 2) out.push_back({{a, b}, at(a, b)});
  return out;
}

std::size_t Encoding::bad_count() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](int x) { return x == -1 || x == 2; }));
}

Digraph Encoding::to_digraph() const {
  require(is_digraph() && entries_in_range(), "Encoding::to_digraph: encoding has bad arcs");
  Digraph g(n_, d_);
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = 0; b < n_; ++b)
      if (at(a, b) == 1) g.add({a, b});
  return g;
}

std::uint64_t Encoding::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
  for (int x : e_) h = (h ^ static_cast<std::uint64_t>(x + 1)) * 0x100000001b3ULL;
  return h;
}

Encoding encoding_of(const Digraph& g, const Digraph& g2, const Digraph& z) {
  require(g.n() == g2.n() && g.n() == z.n(), "encoding_of: vertex counts differ");
  Encoding l(g.n(), g.d());
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = 0; b < g.n(); ++b)
      l.at(a, b) = int(g.has(a, b)) + int(g2.has(a, b)) - int(z.has(a, b));
  return l;
}

void write_encoding(std::ostream& os, const Encoding& l) {
  os << l.n() << ' ' << l.d() << '\n';
  for (Vertex a = 0; a < l.n(); ++a) {
    for (Vertex b = 0; b < l.n(); ++b) os << (b ? " " : "") << l.at(a, b);
    os << '\n';
  }
}

Encoding read_encoding(std::istream& is) {
  int n = 0, d = 0;
  if (!(is >> n >> d) || n < 1 || n > kMaxVertices) throw ContractError("read_encoding: bad header");
  Encoding l(n, d);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (!(is >> l.at(a, b))) throw ContractError("read_encoding: truncated matrix");
  if (!l.entries_in_range()) throw ContractError("read_encoding: entry out of range");
  return l;
}

namespace {

// x is the head (in zeta^i L) of bad arcs with both labels
bool mixed_head(const Encoding& l, int i, Vertex x) {
  bool m = false, t = false;
  for (Vertex a = 0; a < l.n(); ++a) {
    m |= l.at(i, a, x) == -1;
    t |= l.at(i, a, x) == 2;
  }
  return m && t;
}

int count_head(const Encoding& l, int i, Vertex x, int label) {
  int c = 0;
  for (Vertex a = 0; a < l.n(); ++a) c += l.at(i, a, x) == label;
  return c;
}

int count_tail(const Encoding& l, int i, Vertex x, int label) {
  int c = 0;
  for (Vertex b = 0; b < l.n(); ++b) c += l.at(i, x, b) == label;
  return c;
}

int bad_tail(const Encoding& l, int i, Vertex x) { return count_tail(l, i, x, -1) + count_tail(l, i, x, 2); }
int bad_head(const Encoding& l, int i, Vertex x) { return count_head(l, i, x, -1) + count_head(l, i, x, 2); }

bool independent(const HandyTuple& a, const HandyTuple& b) {
  const std::array<Arc, 2> x{zeta(a.i, {a.alpha, a.beta}), zeta(a.i, {a.alpha, a.gamma})};
  const std::array<Arc, 2> y{zeta(b.i, {b.alpha, b.beta}), zeta(b.i, {b.alpha, b.gamma})};
  for (const Arc& p : x)
    for (const Arc& q : y)
      if (p == q) return false;
  return true;
}

bool has_independent_partner(const HandyTuple& t, const std::vector<HandyTuple>& all) {
  for (const HandyTuple& u : all)
    if (u.alpha != t.alpha && independent(t, u)) return true;
  return false;
}

bool distinct4(Vertex a, Vertex b, Vertex c, Vertex d) {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

}  // namespace

std::vector<HandyTuple> handy_tuples(const Encoding& l) {
  std::vector<HandyTuple> out;
  const int n = l.n();
  for (int i = 0; i < 2; ++i)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) {
        if (l.at(i, a, b) != 2) continue;
        for (Vertex c = 0; c < n; ++c) {
          if (l.at(i, a, c) != -1) continue;
          const bool vh = int(mixed_head(l, i, b)) + int(mixed_head(l, i, c)) <= 1;
          out.push_back({i, a, b, c, vh});
        }
      }
  return out;
}

void ValidityReport::fail(const std::string& clause, const std::string& detail) {
  valid = false;
  violations.push_back(clause + ": " + detail);
}

ValidityReport check_z_valid(const Encoding& l, const Digraph& z) {
  ValidityReport r;
  const int n = l.n();
  if (!l.entries_in_range()) r.fail("entries", "entry outside {-1,0,1,2} or nonzero diagonal");
  if (!l.sums_ok()) r.fail("entries", "row or column sum differs from d");
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      int s = l.at(a, b) + int(z.has(a, b));
      if (s < 0 || s > 2) r.fail("entries", "L+Z outside {0,1,2} at " + arc_string({a, b}));
    }
  if (!r.valid) return r;

  const std::vector<LabelledArc> bad = l.bad_arcs();
  if (bad.size() > 5 || !match_zoo(bad)) r.fail("(i)", std::to_string(bad.size()) + " bad arcs match no zoo shape");

  const std::vector<HandyTuple> handy = handy_tuples(l);
  const bool any_very = std::any_of(handy.begin(), handy.end(), [](const HandyTuple& t) { return t.very_handy; });
  if (!handy.empty() && !any_very) r.fail("(ii)", "handy tuple without a very handy tuple");

  if (bad.size() == 5) {
    bool ok = false;
    for (const HandyTuple& t : handy)
      if (t.very_handy && has_independent_partner(t, handy)) ok = true;
    if (!ok) r.fail("(iii)", "five bad arcs without an independent very handy / handy pair");
  }
  if (bad.size() == 4 && handy.empty()) r.fail("(iv)", "four bad arcs and no handy tuple");

  std::vector<Arc> twos;
  for (const LabelledArc& la : bad)
    if (la.label == 2) twos.push_back(la.arc);
  auto in_h = [&](Vertex a, Vertex b) { return l.at(a, b) + int(z.has(a, b)) == 1; };

  if (l.d() == 1) {
    for (const Arc& t : twos)
      for (Vertex x = 0; x < n; ++x)
        for (Vertex e : {t.tail, t.head})
          if (in_h(e, x) || in_h(x, e)) r.fail("(v)", "arc of H incident with label-2 arc " + arc_string(t));
    if (!twos.empty() && bad.size() > 1) {
      if (handy.empty()) r.fail("(v)", "label-2 arc among several bad arcs but no handy tuple");
      if (bad.size() > 3 || twos.size() != 1) r.fail("(v)", "more than three bad arcs or several label-2 arcs");
      if (bad.size() == 3 && twos.size() == 1) {
        const Arc t = twos.front();
        bool tail_centre = false, head_centre = false;
        for (const HandyTuple& h : handy) {
          tail_centre |= h.i == 0 && h.alpha == t.tail;
          head_centre |= h.i == 1 && h.alpha == t.head;
        }
        if (!tail_centre || !head_centre) r.fail("(v)", "endvertex of the label-2 arc is not a handy centre");
      }
    }
  }
  if (l.d() == 2) {
    for (Vertex x = 0; x < n; ++x) {
      bool touched = false;
      for (Vertex y = 0; y < n; ++y) touched |= in_h(x, y) || in_h(y, x);
      if (!touched) continue;
      if (count_head(l, 0, x, 2) > 1 || count_tail(l, 0, x, 2) > 1)
        r.fail("(vi)", "vertex " + std::to_string(x + 1) + " meets two label-2 arcs on one side");
    }
  }
  return r;
}

const char* to_string(RepairKind k) {
  switch (k) {
    case RepairKind::MinusOneTwo: return "(-1,2)";
    case RepairKind::Two: return "2";
    default: return "(-1)";
  }
}

bool encoding_switch_legal(const Encoding& l, int i, Vertex x, Vertex y, Vertex w, Vertex z) {
  return distinct4(x, y, w, z) && l.at(i, x, y) > -1 && l.at(i, w, z) > -1 && l.at(i, x, z) < 2 &&
         l.at(i, w, y) < 2;
}

void apply_encoding_switch(Encoding& l, int i, Vertex x, Vertex y, Vertex w, Vertex z) {
  require(encoding_switch_legal(l, i, x, y, w, z), "apply_encoding_switch: illegal switch");
  --l.at(i, x, y);
  --l.at(i, w, z);
  ++l.at(i, x, z);
  ++l.at(i, w, y);
}

namespace {

std::optional<EncodingSwitch> next_repair(const Encoding& l, std::size_t& fallbacks) {
  const int n = l.n();
  const std::vector<HandyTuple> handy = handy_tuples(l);

  if (!handy.empty()) {
    std::vector<HandyTuple> cand;
    for (const HandyTuple& t : handy)
      if (t.very_handy && has_independent_partner(t, handy)) cand.push_back(t);
    if (cand.empty())
      for (const HandyTuple& t : handy)
        if (t.very_handy) cand.push_back(t);
    ensure(!cand.empty(), "repair (-1,2)-switch", "handy tuple but no very handy tuple");
    // a -1 at (delta, beta) is cleared by the same switch
    for (int at_beta : {0, -1})
      for (const HandyTuple& t : cand)
        for (Vertex dl = 0; dl < n; ++dl)
          if (distinct4(t.alpha, t.beta, t.gamma, dl) && l.at(t.i, dl, t.gamma) == 1 && l.at(t.i, dl, t.beta) == at_beta) {
            if (at_beta != 0) ++fallbacks;
            return EncodingSwitch{RepairKind::MinusOneTwo, t.i, t.alpha, t.beta, t.gamma, dl};
          }
    // the only label-1 arc into gamma may leave beta; fall back to the single-drop rules
    ++fallbacks;
  }

  bool has_two = false;
  for (const LabelledArc& la : l.bad_arcs()) has_two |= la.label == 2;
  if (has_two) {
    for (int i = 0; i < 2; ++i)
      for (Vertex a = 0; a < n; ++a) {
        if (bad_tail(l, i, a) != 1) continue;
        for (Vertex b = 0; b < n; ++b) {
          if (l.at(i, a, b) != 2) continue;
          for (Vertex g = 0; g < n; ++g) {
            if (g == a || l.at(i, a, g) != 0 || count_head(l, i, g, 2) > 0) continue;
            for (Vertex dl = 0; dl < n; ++dl)
              if (distinct4(a, b, g, dl) && l.at(i, dl, b) == 0 && l.at(i, dl, g) == 1)
                return EncodingSwitch{RepairKind::Two, i, a, b, g, dl};
          }
        }
      }
    throw InvariantViolation("repair 2-switch", "no admissible (alpha, beta, gamma, delta)");
  }

  if (l.bad_count() == 0) return std::nullopt;
  for (int pass = 0; pass < 2; ++pass) {
    // pass 0 restricts alpha to tails of two bad arcs labelled -1
    for (int i = 0; i < 2; ++i)
      for (Vertex a = 0; a < n; ++a) {
        if (pass == 0 && count_tail(l, i, a, -1) < 2) continue;
        for (Vertex b = 0; b < n; ++b) {
          if (l.at(i, a, b) != 1 || bad_head(l, i, b) > 0) continue;
          for (Vertex g = 0; g < n; ++g) {
            if (l.at(i, a, g) != -1) continue;
            for (Vertex dl = 0; dl < n; ++dl)
              if (distinct4(a, b, g, dl) && l.at(i, dl, b) == 0 && l.at(i, dl, g) == 1)
                return EncodingSwitch{RepairKind::MinusOne, i, a, b, g, dl};
          }
        }
      }
    bool any_pref = false;
    for (int i = 0; i < 2; ++i)
      for (Vertex a = 0; a < n; ++a) any_pref |= count_tail(l, i, a, -1) >= 2;
    ensure(!any_pref || pass == 1, "repair (-1)-switch", "preferred centre admits no switch");
  }
  throw InvariantViolation("repair (-1)-switch", "no admissible (alpha, beta, gamma, delta)");
}

}  // namespace

RepairResult repair(const Encoding& l0, const Digraph& z) {
  ValidityReport v0 = check_z_valid(l0, z);
  ensure(v0.valid, "repair precondition", v0.violations.empty() ? "" : v0.violations.front());
  RepairResult out;
  Encoding l = l0;
  out.bad_counts.push_back(l.bad_count());
  while (auto sw = next_repair(l, out.fallbacks)) {
    const bool extra = l.at(sw->i, sw->delta, sw->beta) == -1;
    apply_encoding_switch(l, sw->i, sw->alpha, sw->beta, sw->delta, sw->gamma);
    out.switches.push_back(*sw);
    const std::size_t before = out.bad_counts.back(), after = l.bad_count();
    out.bad_counts.push_back(after);
    const std::size_t drop = (sw->kind == RepairKind::MinusOneTwo ? 2 : 1) + (extra ? 1 : 0);
    ensure(after + drop == before, "repair monotonicity", "|F| did not drop by " + std::to_string(drop));
    ValidityReport v = check_z_valid(l, z);
    ensure(v.valid, "repair Z-validity", v.violations.empty() ? "" : v.violations.front());
    ensure(out.switches.size() <= 3, "repair length", "more than three switches");
  }
  out.result = l.to_digraph();
  ensure(out.result.is_regular(), "repair result", "repaired digraph is not regular");
  return out;
}

namespace {

enum Op : char { kMinusOne = 'a', kTwo = 'b', kMinusOneTwo = 'c' };

std::set<std::string> admissible_types() {
  const char* base[] = {"acc", "bcc", "aac", "abc", "bbc", "aaa", "aab", "abb", "bbb"};
  std::set<std::string> out;
  for (const char* s : base) {
    std::string t(s);
    for (int mask = 0; mask < 8; ++mask) {
      std::string sub;
      for (int k = 0; k < 3; ++k)
        if (mask >> k & 1) sub += t[static_cast<std::size_t>(k)];
      out.insert(sub);
    }
  }
  return out;
}

bool any_label(const Encoding& l, int label) {
  const auto& e = l.entries();
  return std::find(e.begin(), e.end(), label) != e.end();
}

bool some_mixed(const Encoding& l) {
  for (int i = 0; i < 2; ++i)
    for (Vertex x = 0; x < l.n(); ++x)
      if (mixed_head(l, i, x)) return true;
  return false;
}

// all results of reverse switches of one kind applied to b
std::vector<Encoding> reverse_moves(const Encoding& b, const Digraph& z, Op op) {
  std::vector<Encoding> out;
  const int n = b.n();
  auto zi = [&](int i, Vertex x, Vertex y) { return (i & 1) ? z.has(y, x) : z.has(x, y); };
  if (op == kMinusOne && any_label(b, 2)) return out;
  if (op == kTwo && some_mixed(b)) return out;
  for (int i = 0; i < 2; ++i)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex be = 0; be < n; ++be)
        for (Vertex g = 0; g < n; ++g)
          for (Vertex dl = 0; dl < n; ++dl) {
            if (!distinct4(a, be, g, dl)) continue;
            Encoding r = b;
            if (op == kMinusOne) {
              if (b.at(i, a, g) != 0 || !zi(i, a, g) || b.at(i, a, be) != 0 || bad_head(b, i, be) > 0 ||
                  b.at(i, dl, be) != 1 || b.at(i, dl, g) != 0)
                continue;
              r.at(i, a, g) = -1;
              r.at(i, a, be) = 1;
              r.at(i, dl, be) = 0;
              r.at(i, dl, g) = 1;
            } else if (op == kTwo) {
              if (b.at(i, a, be) != 1 || zi(i, a, be) || b.at(i, a, g) != 1 || b.at(i, dl, be) != 1 ||
                  b.at(i, dl, g) != 0 || count_tail(b, i, a, -1) > 0 || count_head(b, i, be, -1) > 0 ||
                  count_head(b, i, g, 2) > 0)
                continue;
              r.at(i, a, be) = 2;
              r.at(i, a, g) = 0;
              r.at(i, dl, be) = 0;
              r.at(i, dl, g) = 1;
              if (some_mixed(r)) continue;
            } else {
              if (b.at(i, a, be) != 1 || zi(i, a, be) || b.at(i, a, g) != 0 || !zi(i, a, g) ||
                  b.at(i, dl, be) != 1 || b.at(i, dl, g) != 0 || count_head(b, i, be, -1) > 0 ||
                  bad_tail(b, i, a) > 1)
                continue;
              r.at(i, a, be) = 2;
              r.at(i, a, g) = -1;
              r.at(i, dl, be) = 0;
              r.at(i, dl, g) = 1;
            }
            if (is_z_valid(r, z)) out.push_back(std::move(r));
          }
  return out;
}

}  // namespace

ReverseCount count_reverse_reachable(const Digraph& a, const Digraph& z, int budget) {
  require(a.n() == z.n() && a.d() == z.d(), "count_reverse_reachable: mismatched digraphs");
  require(budget >= 0 && budget <= 3, "count_reverse_reachable: budget must be in [0,3]");
  const double n = a.n(), d = a.d();
  ReverseCount rc;
  rc.bound = 25.0 * std::pow(d, 6) * std::pow(n, 6);
  const std::set<std::string> types = admissible_types();
  rc.types = types.size();

  Encoding start(a.n(), a.d());
  for (const Arc& e : a.arcs()) start.at(e.tail, e.head) = 1;

  std::unordered_set<Encoding, EncodingHash> seen{start};
  std::vector<std::pair<Encoding, std::string>> frontier{{start, ""}};
  std::set<std::pair<std::uint64_t, std::string>> expanded;
  const double b1 = 2 * d * d * n * (n - 2), b2 = 2 * d * (d - 1) * (d - 1) * n, b12 = 2 * d * d * (d + 1) * n;
  for (int depth = 0; depth < budget; ++depth) {
    std::vector<std::pair<Encoding, std::string>> next;
    for (const auto& [enc, seq] : frontier) {
      if (!expanded.insert({enc.hash(), seq}).second) continue;
      for (Op op : {kMinusOne, kTwo, kMinusOneTwo}) {
        const std::string ext = seq + static_cast<char>(op);
        if (!types.count(ext)) continue;
        std::vector<Encoding> moves = reverse_moves(enc, z, op);
        const double cnt = static_cast<double>(moves.size());
        if (op == kMinusOne) {
          rc.max_n_minus_one = std::max(rc.max_n_minus_one, moves.size());
          rc.step_bounds_hold &= cnt <= b1;
        } else if (op == kTwo) {
          rc.max_n_two = std::max(rc.max_n_two, moves.size());
          rc.step_bounds_hold &= cnt <= b2;
        } else {
          rc.max_n_minus_one_two = std::max(rc.max_n_minus_one_two, moves.size());
          rc.step_bounds_hold &= cnt <= b12;
        }
        for (Encoding& m : moves) {
          seen.insert(m);
          next.emplace_back(std::move(m), ext);
        }
      }
    }
    frontier = std::move(next);
  }
  rc.total = seen.size();
  return rc;
}

PairTemplate pair_template(const Pairing& psi) {
  PairTemplate t;
  for (const Arc& a : psi.diff().arcs()) {
    for (int at_head = 0; at_head < 2; ++at_head) {
      Arc b = at_head ? psi.partner_at_head(a) : psi.partner_at_tail(a);
      if (!(a < b)) continue;
      t.pairs.push_back({a.tail, a.head, b.tail, b.head, at_head});
    }
  }
  std::sort(t.pairs.begin(), t.pairs.end());
  return t;
}

std::size_t count_preimages(const StateSpace& s, const Digraph& z, const Digraph& z2, const Encoding& l,
                            const PairTemplate& psi) {
  std::size_t count = 0;
  for (const Digraph& g : s.states)
    for (const Digraph& g2 : s.states) {
      if (g == g2 || !(encoding_of(g, g2, z) == l)) continue;
      const ColouredDiff h = sym_diff(g, g2);
      bool hit = false;
      for_each_pairing(h, [&](const Pairing& p) {
        if (hit || !(pair_template(p) == psi)) return;
        PathTrace tr = build_canonical_path(g, g2, p, {false});
        for (std::size_t k = 0; k + 1 < tr.states.size(); ++k)
          if (tr.states[k] == z && tr.states[k + 1] == z2) hit = true;
      });
      count += hit ? 1 : 0;
    }
  return count;
}

}  // namespace swc
