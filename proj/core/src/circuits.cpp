#include "switchchain/circuits.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "switchchain/errors.hpp"

namespace swc {

Arc Circuit::arc_at(std::size_t p) const {
  const std::size_t k = verts.size();
  Vertex a = verts[p % k], b = verts[(p + 1) % k];
  Arc arc = (p % 2 == 0) ? Arc{a, b} : Arc{b, a};
  return zeta(orient, arc);
}

std::vector<Arc> Circuit::arcs() const {
  std::vector<Arc> out;
  for (std::size_t p = 0; p < verts.size(); ++p) out.push_back(arc_at(p));
  return out;
}

std::string Circuit::to_string() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < verts.size(); ++p) os << (p ? " " : "") << verts[p] + 1;
  os << (orient ? " (reverse)" : " (forward)");
  return os.str();
}

std::vector<Circuit> decompose_circuits(const ColouredDiff& h, const Pairing& psi) {
  std::vector<Arc> all = h.arcs();
  std::set<Arc> used;
  std::vector<Circuit> out;
  for (const Arc& first : all) {
    if (used.count(first)) continue;
    Circuit c;
    c.verts = {first.tail, first.head};
    used.insert(first);
    Arc cur = first;
    while (true) {
      Arc b = psi.partner_at_head(cur);
      Arc nxt = psi.partner_at_tail(b);
      ensure(!used.count(b), "circuit decomposition", "arc " + arc_string(b) + " reached twice");
      used.insert(b);
      if (nxt == first) {
        ensure(b.tail == first.tail, "circuit decomposition", "closing arc does not return to w0");
        break;
      }
      ensure(!used.count(nxt), "circuit decomposition", "arc " + arc_string(nxt) + " reached twice");
      used.insert(nxt);
      c.verts.push_back(b.tail);
      c.verts.push_back(nxt.head);
      cur = nxt;
    }
    out.push_back(std::move(c));
  }
  ensure(used.size() == all.size(), "circuit decomposition", "circuits do not cover H");
  return out;
}

std::vector<RawSegment> split_raw_segments(const Circuit& c, std::size_t circuit_index) {
  require(c.size() >= 4 && c.size() % 2 == 0, "split_raw_segments: malformed circuit");
  const Vertex v = c.verts.front();
  std::vector<RawSegment> out;

  // current unprocessed section: verts[lo, hi) of the original string, with orientation
  std::size_t lo = 0, hi = c.size();
  int orient = c.orient;
  auto slice = [&](std::size_t a, std::size_t b) {
    return std::vector<Vertex>(c.verts.begin() + static_cast<std::ptrdiff_t>(a),
                               c.verts.begin() + static_cast<std::ptrdiff_t>(b));
  };
  while (lo < hi) {
    std::vector<std::size_t> occ;
    for (std::size_t p = lo; p < hi; ++p)
      if (c.verts[p] == v) occ.push_back(p);
    ensure(!occ.empty() && occ.front() == lo, "raw splitting", "section does not start at v");
    // the section's own orientation: arc at its first position is out of v when forward
    const int sec_orient = orient;
    if (occ.size() == 1) {
      out.push_back({RawKind::OneCircuit, {slice(lo, hi), sec_orient}, circuit_index, lo});
      break;
    }
    const std::size_t b1_end = occ[1];
    const std::size_t bt_begin = occ.back();
    if ((b1_end - lo) % 2 == 0) {
      out.push_back({RawKind::OneCircuit, {slice(lo, b1_end), sec_orient}, circuit_index, lo});
      lo = b1_end;
      continue;
    }
    if ((hi - bt_begin) % 2 == 0) {
      out.push_back({RawKind::OneCircuit, {slice(bt_begin, hi), sec_orient}, circuit_index, bt_begin});
      hi = bt_begin;
      continue;
    }
    std::vector<Vertex> two = slice(lo, b1_end);
    std::vector<Vertex> tail = slice(bt_begin, hi);
    two.insert(two.end(), tail.begin(), tail.end());
    out.push_back({RawKind::TwoCircuit, {std::move(two), sec_orient}, circuit_index, lo});
    lo = b1_end;
    hi = bt_begin;
    orient ^= 1;  // the remaining blocks form a reverse circuit
  }
  return out;
}

bool well_paired(const RawSegment& seg, const Pairing& psi) {
  const Circuit& s = seg.s;
  const std::size_t k = s.size();
  const Vertex v = seg.start();
  for (std::size_t p = 0; p < k; ++p) {
    Vertex b = s.at(p + 1);
    if (b == v) continue;
    if (!psi.paired_at(s.arc_at(p), s.arc_at(p + 1), b)) return false;
  }
  return true;
}

Pairing pairing_from_circuits(const ColouredDiff& h, const std::vector<Circuit>& circuits) {
  std::vector<std::pair<Arc, Arc>> at_head, at_tail;
  for (const Circuit& c : circuits) {
    for (std::size_t p = 0; p < c.size(); ++p) {
      Arc a = c.arc_at(p), b = c.arc_at(p + 1);
      if (a.head == b.head) at_head.emplace_back(a, b);
      else if (a.tail == b.tail) at_tail.emplace_back(a, b);
      else throw ContractError("pairing_from_circuits: circuit does not alternate in orientation");
    }
  }
  return pairing_from_pairs(h, at_head, at_tail);
}

}  // namespace swc
