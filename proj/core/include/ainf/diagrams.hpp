#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ainf/graded.hpp"

namespace ainf::diagrams {

// A leaf, or a multiplication vertex with at least two ordered subtrees.
struct PlanarTree {
  std::vector<PlanarTree> children;

  static PlanarTree leaf() { return {}; }
  static PlanarTree vertex(std::vector<PlanarTree> children);

  bool is_leaf() const { return children.empty(); }
  int leaves() const;
  // Sum over internal vertices of (arity - 2).
  int excess() const;
  int internal_vertices() const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

// Slots 0..r-1 top, r left, r+1..r+s bottom, r+s+1 right (0-based).
struct Diagram {
  int r = 0;
  int s = 0;
  std::vector<PlanarTree> slots;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Throws InputError on a malformed diagram.
void validate(const Diagram& d);
Diagram bare_circle(int r, int s);

int degree(const Diagram& d);
int leaf_count(const Diagram& d);

// Canonical byte encoding: r, s, then each slot tree in preorder (leaf 0, vertex = arity).
std::string encode(const Diagram& d);
Diagram decode(const std::string& code);
Diagram canonicalize(const Diagram& d);

// All diagrams with exactly one more multiplication vertex.
std::vector<Diagram> insertions(const Diagram& d);

// Z/2 chain: the set of diagrams with coefficient 1, keyed by canonical encoding.
class Chain {
 public:
  Chain() = default;
  explicit Chain(const Diagram& d) { toggle(d); }
  void toggle(const Diagram& d) { toggle_code(encode(d)); }
  void toggle_code(const std::string& code);
  bool is_zero() const { return codes_.empty(); }
  std::size_t size() const { return codes_.size(); }
  const std::set<std::string>& codes() const { return codes_; }
  std::vector<Diagram> diagrams() const;
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::set<std::string> codes_;
};

Chain differential(const Chain& c);

// Canonical diagrams with N leaves and the given degree, ordered by encoding.
std::vector<Diagram> enumerate(int leaves, int degree);
// All degrees at once: degree -> basis.
std::map<int, std::vector<Diagram>> enumerate_all(int leaves);

// Sparse Z/2 matrix stored by columns (sorted row indices).
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> columns;
};

// Matrix of d from the degree-n basis to the degree-(n-1) basis.
SparseMatrix boundary_matrix(int leaves, int degree);
int rank_mod2(SparseMatrix m);
// (degree, betti) for degrees 0..N-2.
std::vector<std::pair<int, int>> homology_ranks(int leaves);

struct D2Report {
  bool passed = true;
  long long diagrams = 0;
  long long insertions = 0;
  std::vector<std::string> failures;
};
// d^2 = 0 and the degree drop, over every diagram with the given leaf count.
D2Report check_d_squared(int leaves);

enum class RenderFormat { Dot, Tikz };
RenderFormat parse_render_format(const std::string& name);
std::string render(const Diagram& d, RenderFormat format);
// Bracket notation with leaves labeled a, b, c, ... counterclockwise.
std::string to_text(const Diagram& d);

}  // namespace ainf::diagrams
