#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "switchchain/digraph.hpp"
#include "switchchain/enumeration.hpp"
#include "switchchain/pairing.hpp"
#include "switchchain/zoo.hpp"

namespace swc {

// n x n matrix with entries in {-1,0,1,2}, zero diagonal
class Encoding {
 public:
  Encoding() = default;
  Encoding(int n, int d) : n_(n), d_(d), e_(static_cast<std::size_t>(n * n), 0) {}

  int n() const { return n_; }
  int d() const { return d_; }
  int at(Vertex a, Vertex b) const { return e_[static_cast<std::size_t>(a * n_ + b)]; }
  int& at(Vertex a, Vertex b) { return e_[static_cast<std::size_t>(a * n_ + b)]; }
  // entry of zeta^i L
  int at(int i, Vertex a, Vertex b) const { return (i & 1) ? at(b, a) : at(a, b); }
  int& at(int i, Vertex a, Vertex b) { return (i & 1) ? at(b, a) : at(a, b); }

  bool sums_ok() const;          // all row and column sums equal d
  bool entries_in_range() const; // {-1,0,1,2}, zero diagonal
  std::vector<LabelledArc> bad_arcs() const;  // F(L) with labels, lexicographic
  std::size_t bad_count() const;
  bool is_digraph() const { return bad_count() == 0; }
  Digraph to_digraph() const;  // requires no bad arcs

  friend bool operator==(const Encoding&, const Encoding&) = default;
  friend bool operator<(const Encoding& a, const Encoding& b) { return a.e_ < b.e_; }
  std::uint64_t hash() const;
  const std::vector<int>& entries() const { return e_; }

 private:
  int n_ = 0, d_ = 0;
  std::vector<int> e_;
};

struct EncodingHash {
  std::size_t operator()(const Encoding& e) const { return static_cast<std::size_t>(e.hash()); }
};

Encoding encoding_of(const Digraph& g, const Digraph& g2, const Digraph& z);

// "n d" header then n rows
void write_encoding(std::ostream& os, const Encoding& l);
Encoding read_encoding(std::istream& is);

struct HandyTuple {
  int i = 0;
  Vertex alpha = 0, beta = 0, gamma = 0;
  bool very_handy = false;
  friend auto operator<=>(const HandyTuple&, const HandyTuple&) = default;
};

std::vector<HandyTuple> handy_tuples(const Encoding& l);  // lexicographic in (i, alpha, beta, gamma)

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> violations;  // clause name: detail
  void fail(const std::string& clause, const std::string& detail);
};

ValidityReport check_z_valid(const Encoding& l, const Digraph& z);
inline bool is_z_valid(const Encoding& l, const Digraph& z) { return check_z_valid(l, z).valid; }

enum class RepairKind { MinusOneTwo, Two, MinusOne };
const char* to_string(RepairKind k);

// zeta^i [alpha beta delta gamma] on an encoding
struct EncodingSwitch {
  RepairKind kind = RepairKind::MinusOneTwo;
  int i = 0;
  Vertex alpha = 0, beta = 0, gamma = 0, delta = 0;
};

// decrease zeta^i L at (x,y) and (w,z); increase at (x,z) and (w,y)
bool encoding_switch_legal(const Encoding& l, int i, Vertex x, Vertex y, Vertex w, Vertex z);
void apply_encoding_switch(Encoding& l, int i, Vertex x, Vertex y, Vertex w, Vertex z);

struct RepairResult {
  std::vector<EncodingSwitch> switches;
  std::vector<std::size_t> bad_counts;  // |F| before each switch and at the end
  std::size_t fallbacks = 0;            // states where the (-1,2) rule needed a -1 at (delta,beta) or no delta existed
  Digraph result;
};

// canonical repair; throws InvariantViolation when a guaranteed choice is missing
RepairResult repair(const Encoding& l, const Digraph& z);

struct ReverseCount {
  std::size_t total = 0;  // distinct encodings reachable, A included
  std::size_t types = 0;  // number of admissible type sequences
  std::size_t max_n_minus_one = 0, max_n_two = 0, max_n_minus_one_two = 0;
  bool step_bounds_hold = true;
  double bound = 0.0;  // 25 d^6 n^6
};

// encodings reachable from A by at most `budget` reverse switches of the
// admissible types, each intermediate encoding Z-valid
ReverseCount count_reverse_reachable(const Digraph& a, const Digraph& z, int budget = 3);

// uncoloured pairing of H: pairs of arcs sharing a head or a tail, sorted
struct PairTemplate {
  std::vector<std::array<int, 5>> pairs;  // {a.tail, a.head, b.tail, b.head, shared head} with a < b
  friend bool operator==(const PairTemplate&, const PairTemplate&) = default;
  friend bool operator<(const PairTemplate& a, const PairTemplate& b) { return a.pairs < b.pairs; }
};

PairTemplate pair_template(const Pairing& psi);

// brute force over all (G, G', psi) in the state space
std::size_t count_preimages(const StateSpace& s, const Digraph& z, const Digraph& z2, const Encoding& l,
                            const PairTemplate& psi);

}  // namespace swc
