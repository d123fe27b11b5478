#include "ainf/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace ainf::diagrams {

PlanarTree PlanarTree::vertex(std::vector<PlanarTree> children) {
  if (children.size() < 2) throw InputError("a multiplication vertex needs at least two inputs");
  return PlanarTree{std::move(children)};
}

int PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

int PlanarTree::excess() const {
  if (is_leaf()) return 0;
  int e = static_cast<int>(children.size()) - 2;
  for (const auto& c : children) e += c.excess();
  return e;
}

int PlanarTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const auto& c : children) n += c.internal_vertices();
  return n;
}

namespace {

void validate_tree(const PlanarTree& t) {
  if (t.children.size() == 1) throw InputError("a multiplication vertex needs at least two inputs");
  for (const auto& c : t.children) validate_tree(c);
}

void encode_tree(const PlanarTree& t, std::string& out) {
  if (t.children.size() > 255) throw InputError("vertex arity too large");
  out.push_back(static_cast<char>(t.children.size()));
  for (const auto& c : t.children) encode_tree(c, out);
}

PlanarTree decode_tree(const std::string& code, std::size_t& pos) {
  if (pos >= code.size()) throw InputError("truncated diagram encoding");
  const auto arity = static_cast<unsigned char>(code[pos++]);
  PlanarTree t;
  for (unsigned i = 0; i < arity; ++i) t.children.push_back(decode_tree(code, pos));
  return t;
}

void tree_insertions(const PlanarTree& t, std::vector<PlanarTree>& out) {
  if (t.is_leaf()) return;
  const int a = static_cast<int>(t.children.size());
  for (int b = 2; b <= a - 1; ++b)
    for (int start = 0; start + b <= a; ++start) {
      PlanarTree n;
      n.children.assign(t.children.begin(), t.children.begin() + start);
      n.children.push_back(PlanarTree{std::vector<PlanarTree>(t.children.begin() + start, t.children.begin() + start + b)});
      n.children.insert(n.children.end(), t.children.begin() + start + b, t.children.end());
      out.push_back(std::move(n));
    }
  for (int i = 0; i < a; ++i) {
    std::vector<PlanarTree> sub;
    tree_insertions(t.children[i], sub);
    for (auto& c : sub) {
      PlanarTree n = t;
      n.children[i] = std::move(c);
      out.push_back(std::move(n));
    }
  }
}

}  // namespace

void validate(const Diagram& d) {
  if (d.r < 0 || d.s < 0) throw InputError("r and s must be non-negative");
  if (static_cast<int>(d.slots.size()) != d.r + d.s + 2)
    throw InputError("a diagram with r=" + std::to_string(d.r) + ", s=" + std::to_string(d.s) + " has " +
                     std::to_string(d.r + d.s + 2) + " slots");
  for (const auto& t : d.slots) validate_tree(t);
}

Diagram bare_circle(int r, int s) {
  Diagram d{r, s, std::vector<PlanarTree>(static_cast<std::size_t>(r + s + 2))};
  validate(d);
  return d;
}

int degree(const Diagram& d) {
  int e = d.r + d.s;
  for (const auto& t : d.slots) e += t.excess();
  return e;
}

int leaf_count(const Diagram& d) {
  int n = 0;
  for (const auto& t : d.slots) n += t.leaves();
  return n;
}

std::string encode(const Diagram& d) {
  if (d.r > 255 || d.s > 255) throw InputError("diagram too large");
  std::string out;
  out.push_back(static_cast<char>(d.r));
  out.push_back(static_cast<char>(d.s));
  for (const auto& t : d.slots) encode_tree(t, out);
  return out;
}

Diagram decode(const std::string& code) {
  if (code.size() < 2) throw InputError("truncated diagram encoding");
  Diagram d;
  d.r = static_cast<unsigned char>(code[0]);
  d.s = static_cast<unsigned char>(code[1]);
  std::size_t pos = 2;
  for (int i = 0; i < d.r + d.s + 2; ++i) d.slots.push_back(decode_tree(code, pos));
  if (pos != code.size()) throw InputError("trailing bytes in diagram encoding");
  validate(d);
  return d;
}

Diagram canonicalize(const Diagram& d) {
  validate(d);
  return decode(encode(d));
}

std::vector<Diagram> insertions(const Diagram& d) {
  validate(d);
  std::vector<Diagram> out;
  const int S = static_cast<int>(d.slots.size());
  const int left = d.r, right = S - 1;

  // At the circle: merge a cyclic block of slots.
  for (int start = 0; start < S; ++start)
    for (int b = 2; b < S; ++b) {
      bool has_left = false, has_right = false;
      std::vector<PlanarTree> merged;
      for (int t = 0; t < b; ++t) {
        const int pos = (start + t) % S;
        has_left |= pos == left;
        has_right |= pos == right;
        merged.push_back(d.slots[pos]);
      }
      if (has_left && has_right) continue;
      Diagram n;
      const int from = has_right ? (start + b) % S : 0;
      int left_slot = -1;
      bool placed = false;
      for (int t = 0; t < S; ++t) {
        const int pos = (from + t) % S;
        const bool in_block = (pos - start + S) % S < b;
        if (in_block) {
          if (!placed) {
            if (has_left) left_slot = static_cast<int>(n.slots.size());
            n.slots.push_back(PlanarTree{merged});
            placed = true;
          }
        } else {
          if (pos == left) left_slot = static_cast<int>(n.slots.size());
          n.slots.push_back(d.slots[pos]);
        }
      }
      n.r = left_slot;
      n.s = static_cast<int>(n.slots.size()) - 2 - n.r;
      out.push_back(std::move(n));
    }

  // At an internal vertex: split off a consecutive block of its inputs.
  for (int i = 0; i < S; ++i) {
    std::vector<PlanarTree> sub;
    tree_insertions(d.slots[i], sub);
    for (auto& t : sub) {
      Diagram n = d;
      n.slots[i] = std::move(t);
      out.push_back(std::move(n));
    }
  }
  return out;
}

void Chain::toggle_code(const std::string& code) {
  auto [it, inserted] = codes_.insert(code);
  if (!inserted) codes_.erase(it);
}

std::vector<Diagram> Chain::diagrams() const {
  std::vector<Diagram> out;
  for (const auto& c : codes_) out.push_back(decode(c));
  return out;
}

Chain differential(const Chain& c) {
  Chain out;
  for (const auto& code : c.codes())
    for (const auto& d : insertions(decode(code))) out.toggle(d);
  return out;
}

namespace {

const std::vector<PlanarTree>& trees_with_leaves(int n) {
  static std::map<int, std::vector<PlanarTree>> cache;
  static std::mutex* guard = nullptr;
  (void)guard;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PlanarTree> out;
  if (n == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    // Compositions of n into at least two parts, each part any tree.
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
      if (remaining == 0) {
        if (parts.size() < 2) return;
        std::vector<PlanarTree> cur;
        std::function<void(std::size_t)> prod = [&](std::size_t i) {
          if (i == parts.size()) {
            out.push_back(PlanarTree{cur});
            return;
          }
          for (const auto& t : trees_with_leaves(parts[i])) {
            cur.push_back(t);
            prod(i + 1);
            cur.pop_back();
          }
        };
        prod(0);
        return;
      }
      for (int p = 1; p <= remaining; ++p) {
        if (p == n) continue;
        parts.push_back(p);
        rec(remaining - p);
        parts.pop_back();
      }
    };
    rec(n);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::map<int, std::vector<Diagram>> enumerate_all(int leaves) {
  if (leaves < 2) throw InputError("diagrams need at least two leaves");
  std::map<int, std::vector<std::string>> codes;
  std::vector<int> parts;
  std::vector<PlanarTree> cur;
  std::function<void(std::size_t)> prod = [&](std::size_t i) {
    if (i == parts.size()) {
      const int S = static_cast<int>(cur.size());
      for (int r = 0; r <= S - 2; ++r) {
        Diagram d{r, S - 2 - r, cur};
        codes[degree(d)].push_back(encode(d));
      }
      return;
    }
    for (const auto& t : trees_with_leaves(parts[i])) {
      cur.push_back(t);
      prod(i + 1);
      cur.pop_back();
    }
  };
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (parts.size() >= 2) prod(0);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p);
      parts.pop_back();
    }
  };
  rec(leaves);

  std::map<int, std::vector<Diagram>> out;
  for (int n = 0; n <= leaves - 2; ++n) out[n];
  for (auto& [n, cs] : codes) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    auto& v = out[n];
    for (const auto& c : cs) v.push_back(decode(c));
  }
  return out;
}

std::vector<Diagram> enumerate(int leaves, int degree) {
  if (degree < 0) throw InputError("degree must be non-negative");
  auto all = enumerate_all(leaves);
  auto it = all.find(degree);
  return it == all.end() ? std::vector<Diagram>{} : std::move(it->second);
}

namespace {

SparseMatrix boundary_from(const std::vector<Diagram>& source, const std::vector<Diagram>& target) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(encode(target[i]), static_cast<int>(i));
  SparseMatrix m{static_cast<int>(target.size()), static_cast<int>(source.size()), {}};
  for (const auto& d : source) {
    std::vector<int> col;
    for (const auto& e : insertions(d)) {
      auto it = index.find(encode(e));
      if (it == index.end()) throw Error("insertion left the next basis: " + to_text(e));
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
    // Pairs cancel over Z/2.
    std::vector<int> reduced;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      if ((j - i) % 2) reduced.push_back(col[i]);
      i = j;
    }
    m.columns.push_back(std::move(reduced));
  }
  return m;
}

std::vector<int> xor_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SparseMatrix boundary_matrix(int leaves, int degree) {
  auto all = enumerate_all(leaves);
  const auto& src = all[degree];
  const auto& tgt = degree > 0 ? all[degree - 1] : std::vector<Diagram>{};
  if (degree == 0) return SparseMatrix{0, static_cast<int>(src.size()), std::vector<std::vector<int>>(src.size())};
  return boundary_from(src, tgt);
}

int rank_mod2(SparseMatrix m) {
  std::unordered_map<int, std::size_t> pivot_of_low;
  int rank = 0;
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    auto& col = m.columns[c];
    while (!col.empty()) {
      auto it = pivot_of_low.find(col.back());
      if (it == pivot_of_low.end()) break;
      col = xor_sorted(col, m.columns[it->second]);
    }
    if (!col.empty()) {
      pivot_of_low.emplace(col.back(), c);
      ++rank;
    }
  }
  return rank;
}

std::vector<std::pair<int, int>> homology_ranks(int leaves) {
  auto all = enumerate_all(leaves);
  const int top = leaves - 2;
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[n] = rank of d_n
  for (int n = 1; n <= top; ++n) ranks[n] = rank_mod2(boundary_from(all[n], all[n - 1]));
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= top; ++n) {
    const int dim = static_cast<int>(all[n].size());
    out.emplace_back(n, dim - ranks[n] - ranks[n + 1]);
  }
  return out;
}

D2Report check_d_squared(int leaves) {
  D2Report report;
  auto all = enumerate_all(leaves);
  std::unordered_map<std::string, std::pair<int, int>> index;
  for (const auto& [n, basis] : all)
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(encode(basis[i]), std::pair{n, static_cast<int>(i)});

  // Boundary of every basis diagram, as reduced index lists into the next basis.
  std::map<int, std::vector<std::vector<int>>> boundary;
  for (const auto& [n, basis] : all) {
    auto& cols = boundary[n];
    for (const auto& d : basis) {
      ++report.diagrams;
      std::vector<int> col;
      for (const auto& e : insertions(d)) {
        ++report.insertions;
        auto it = index.find(encode(e));
        if (leaf_count(e) != leaves || degree(e) != n - 1 || it == index.end()) {
          report.failures.push_back("degree drop fails: " + to_text(d) + " -> " + to_text(e));
          continue;
        }
        col.push_back(it->second.second);
      }
      std::sort(col.begin(), col.end());
      std::vector<int> reduced;
      for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i;
        while (j < col.size() && col[j] == col[i]) ++j;
        if ((j - i) % 2) reduced.push_back(col[i]);
        i = j;
      }
      cols.push_back(std::move(reduced));
    }
  }
  for (const auto& [n, basis] : all) {
    if (n < 2) continue;
    const auto& outer = boundary[n - 1];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<int> acc;
      for (int e : boundary[n][i]) acc = xor_sorted(acc, outer[static_cast<std::size_t>(e)]);
      if (!acc.empty()) report.failures.push_back("d^2 != 0 on " + to_text(basis[i]));
    }
  }
  report.passed = report.failures.empty();
  return report;
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "tikz") return RenderFormat::Tikz;
  throw InputError("unknown render format '" + name + "'");
}

namespace {

std::string leaf_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

void text_tree(const PlanarTree& t, int& next, std::ostringstream& os) {
  if (t.is_leaf()) {
    os << leaf_label(next++);
    return;
  }
  os << 'm' << t.children.size() << '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) os << ',';
    text_tree(t.children[i], next, os);
  }
  os << ')';
}

const char* slot_role(const Diagram& d, int i) {
  if (i < d.r) return "top";
  if (i == d.r) return "left";
  if (i < d.r + d.s + 1) return "bottom";
  return "right";
}

// Slot direction in degrees, increasing counterclockwise from the right slot.
double slot_angle(const Diagram& d, int i) {
  if (i < d.r) return 180.0 * (i + 1) / (d.r + 1);
  if (i == d.r) return 180.0;
  if (i < d.r + d.s + 1) return 180.0 + 180.0 * (i - d.r) / (d.s + 1);
  return 0.0;
}

int height(const PlanarTree& t) {
  int h = 0;
  for (const auto& c : t.children) h = std::max(h, height(c) + 1);
  return h;
}

struct Layout {
  struct Node {
    std::string id;
    bool leaf;
    std::string label;
    double angle;
    double radius;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> edges;  // child -> parent (or circle)
  std::vector<std::string> edge_labels;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << (std::abs(x) < 5e-4 ? 0.0 : x);
  return os.str();
}

Layout layout(const Diagram& d) {
  Layout out;
  int next_leaf = 0, next_vertex = 0;
  const int S = static_cast<int>(d.slots.size());
  const double wedge = 360.0 / S * 0.6;
  for (int i = 0; i < S; ++i) {
    const PlanarTree& t = d.slots[i];
    const int h = height(t);
    const int n = t.leaves();
    const double centre = slot_angle(d, i);
    int leaf_in_slot = 0;
    // Returns the node id of the subtree root and its mean angle.
    std::function<std::pair<std::string, double>(const PlanarTree&, int)> place = [&](const PlanarTree& node,
                                                                                      int depth) {
      if (node.is_leaf()) {
        const double a = n == 1 ? centre : centre - wedge / 2 + wedge * leaf_in_slot / (n - 1);
        ++leaf_in_slot;
        const std::string id = "l" + std::to_string(next_leaf);
        out.nodes.push_back({id, true, leaf_label(next_leaf), a, 1.0 + 0.7 * (h + 1)});
        ++next_leaf;
        return std::pair{id, a};
      }
      const std::string id = "v" + std::to_string(next_vertex++);
      const std::size_t self = out.nodes.size();
      out.nodes.push_back({id, false, "", 0.0, 1.0 + 0.7 * depth});
      double sum = 0;
      for (const auto& c : node.children) {
        auto [cid, ca] = place(c, depth + 1);
        out.edges.emplace_back(cid, id);
        out.edge_labels.emplace_back("");
        sum += ca;
      }
      out.nodes[self].angle = sum / static_cast<double>(node.children.size());
      return std::pair{id, out.nodes[self].angle};
    };
    auto [root, ra] = place(t, 0);
    (void)ra;
    out.edges.emplace_back(root, "c");
    out.edge_labels.emplace_back(std::string(slot_role(d, i)) + std::to_string(i + 1));
  }
  return out;
}

}  // namespace

std::string to_text(const Diagram& d) {
  std::ostringstream os;
  int next = 0;
  os << '<';
  for (std::size_t i = 0; i < d.slots.size(); ++i) {
    if (i) os << ',';
    text_tree(d.slots[i], next, os);
  }
  os << ">_{" << d.r << ',' << d.s << '}';
  return os.str();
}

std::string render(const Diagram& d, RenderFormat format) {
  validate(d);
  const Layout lay = layout(d);
  std::ostringstream os;
  const double pi = std::acos(-1.0);
  if (format == RenderFormat::Dot) {
    os << "graph diagram {\n";
    os << "  // " << to_text(d) << ", degree " << degree(d) << "\n";
    os << "  c [shape=circle,style=empty,label=\"\"];\n";
    for (const auto& n : lay.nodes) {
      if (n.leaf) os << "  " << n.id << " [shape=plaintext,label=\"" << n.label << "\"];\n";
      else os << "  " << n.id << " [shape=point,style=filled];\n";
    }
    for (std::size_t i = 0; i < lay.edges.size(); ++i) {
      os << "  " << lay.edges[i].first << " -- " << lay.edges[i].second;
      if (!lay.edge_labels[i].empty()) os << " [label=\"" << lay.edge_labels[i] << "\"]";
      os << ";\n";
    }
    os << "}\n";
    return os.str();
  }
  auto coord = [&](double angle, double radius) {
    const double a = angle * pi / 180.0;
    return "(" + fmt(radius * std::cos(a)) + "," + fmt(radius * std::sin(a)) + ")";
  };
  std::map<std::string, std::string> where;
  where["c"] = "";
  os << "% " << to_text(d) << ", degree " << degree(d) << "\n";
  os << "\\begin{tikzpicture}\n";
  os << "  \\draw (0,0) circle (0.5);\n";
  for (const auto& n : lay.nodes) {
    where[n.id] = coord(n.angle, n.radius);
    if (n.leaf) os << "  \\node[anchor=center] (" << n.id << ") at " << where[n.id] << " {$" << n.label << "$};\n";
    else os << "  \\fill " << where[n.id] << " circle (0.06);\n";
  }
  std::map<std::string, double> angle_of;
  for (const auto& n : lay.nodes) angle_of[n.id] = n.angle;
  for (const auto& [child, parent] : lay.edges) {
    const std::string to = parent == "c" ? coord(angle_of[child], 0.5) : where[parent];
    os << "  \\draw " << where[child] << " -- " << to << ";\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace ainf::diagrams
