#include "ainf/io.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ainf::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path.empty() ? msg : path + ": " + msg);
}

std::string key_path(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok |= a == key;
    if (!ok) fail(key_path(path, key), "unknown field");
  }
  for (auto r : required)
    if (!j.contains(std::string(r))) fail(key_path(path, std::string(r)), "missing field");
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(path, "integer out of range");
  return static_cast<int>(v);
}

const std::string& get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Ring parse_ring(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    fail(path, "unknown ring '" + s + "'");
  }
  require_keys(j, path, {"Zmod"}, {"Zmod"});
  const int p = get_int(j["Zmod"], key_path(path, "Zmod"));
  try {
    return Ring::modular(p);
  } catch (const InputError& e) {
    fail(key_path(path, "Zmod"), e.what());
  }
}

json emit_ring(const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::Integers: return "Z";
    case Ring::Kind::Rationals: return "Q";
    case Ring::Kind::Modular: return json{{"Zmod", r.modulus()}};
  }
  return "Z";
}

GradedBasis parse_basis(const json& doc) {
  const json& b = get_array(doc["basis"], "basis");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string p = index_path("basis", i);
    require_keys(b[i], p, {"name", "degree"}, {"name", "degree"});
    gens.push_back({get_string(b[i]["name"], key_path(p, "name")), get_int(b[i]["degree"], key_path(p, "degree"))});
  }
  std::optional<std::string> unit;
  if (doc.contains("unit")) unit = get_string(doc["unit"], "unit");
  try {
    return GradedBasis(std::move(gens), unit);
  } catch (const InputError& e) {
    fail("basis", e.what());
  }
}

json emit_basis(const GradedBasis& b) {
  json arr = json::array();
  for (const auto& g : b.generators()) arr.push_back(json{{"name", g.name}, {"degree", g.degree}});
  return arr;
}

// How one family of operations is laid out in a file.
struct OpLayout {
  bool marked = false;           // arity is [k, l]
  int extra_inputs = 0;          // inputs = n, or k + l + extra_inputs when marked
  const GradedBasis* algebra = nullptr;
  const GradedBasis* module_in = nullptr;  // basis at input position k, when set
  const GradedBasis* out = nullptr;        // null: scalar valued
};

struct RawEntry {
  std::vector<Letter> in;
  std::vector<std::pair<Letter, Scalar>> out;
  int in_degree = 0;
  std::string path;
};

struct RawOp {
  int k = 0;
  int l = 0;
  int inputs = 0;
  std::string path;
  std::vector<RawEntry> entries;
};

std::vector<RawOp> parse_ops(const json& doc, const Ring& ring, const OpLayout& layout) {
  std::vector<RawOp> out;
  if (!doc.contains("ops")) return out;
  const json& ops = get_array(doc["ops"], "ops");
  std::set<std::pair<int, int>> seen;
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    const std::string op_path = index_path("ops", oi);
    const json& op = ops[oi];
    require_keys(op, op_path, {"arity", "k", "l", "entries"});
    RawOp raw;
    raw.path = op_path;
    if (layout.marked) {
      if (op.contains("arity")) {
        if (op.contains("k") || op.contains("l")) fail(op_path, "give either \"arity\" or \"k\"/\"l\"");
        const json& a = op["arity"];
        const std::string ap = key_path(op_path, "arity");
        if (!a.is_array() || a.size() != 2) fail(ap, "expected [k, l]");
        raw.k = get_int(a[0], index_path(ap, 0));
        raw.l = get_int(a[1], index_path(ap, 1));
      } else {
        if (!op.contains("k") || !op.contains("l")) fail(key_path(op_path, "arity"), "missing field");
        raw.k = get_int(op["k"], key_path(op_path, "k"));
        raw.l = get_int(op["l"], key_path(op_path, "l"));
      }
      if (raw.k < 0 || raw.l < 0) fail(key_path(op_path, "arity"), "k and l must be non-negative");
      raw.inputs = raw.k + raw.l + layout.extra_inputs;
    } else {
      if (op.contains("k") || op.contains("l")) fail(op_path, "expected a plain \"arity\"");
      if (!op.contains("arity")) fail(key_path(op_path, "arity"), "missing field");
      raw.k = get_int(op["arity"], key_path(op_path, "arity"));
      if (raw.k < 0) fail(key_path(op_path, "arity"), "arity must be non-negative");
      raw.inputs = raw.k;
    }
    if (!seen.insert({raw.k, raw.l}).second) fail(key_path(op_path, "arity"), "duplicate operation");

    std::set<std::vector<Letter>> tuples;
    const json& entries = op.contains("entries") ? get_array(op["entries"], key_path(op_path, "entries")) : json::array();
    for (std::size_t ei = 0; ei < entries.size(); ++ei) {
      const std::string ep = index_path(key_path(op_path, "entries"), ei);
      const json& e = entries[ei];
      if (layout.out) require_keys(e, ep, {"in", "out"}, {"in", "out"});
      else require_keys(e, ep, {"in", "scalar"}, {"in", "scalar"});
      RawEntry entry;
      entry.path = ep;
      const std::string ip = key_path(ep, "in");
      const json& in = get_array(e["in"], ip);
      if (static_cast<int>(in.size()) != raw.inputs)
        fail(ip, "expected " + std::to_string(raw.inputs) + " inputs, got " + std::to_string(in.size()));
      for (std::size_t i = 0; i < in.size(); ++i) {
        const std::string& name = get_string(in[i], index_path(ip, i));
        const GradedBasis& b = (layout.module_in && static_cast<int>(i) == raw.k) ? *layout.module_in : *layout.algebra;
        auto letter = b.find(name);
        if (!letter) fail(index_path(ip, i), "unknown generator '" + name + "'");
        entry.in.push_back(*letter);
        entry.in_degree += b.degree(*letter);
      }
      if (!tuples.insert(entry.in).second) fail(ip, "duplicate input tuple");
      if (layout.out) {
        const std::string op2 = key_path(ep, "out");
        const json& outs = get_array(e["out"], op2);
        for (std::size_t i = 0; i < outs.size(); ++i) {
          const std::string tp = index_path(op2, i);
          require_keys(outs[i], tp, {"c", "b"}, {"c", "b"});
          const std::string& name = get_string(outs[i]["b"], key_path(tp, "b"));
          auto letter = layout.out->find(name);
          if (!letter) fail(key_path(tp, "b"), "unknown generator '" + name + "'");
          try {
            entry.out.emplace_back(*letter, Scalar::parse(ring, get_string(outs[i]["c"], key_path(tp, "c"))));
          } catch (const InputError& err) {
            fail(key_path(tp, "c"), err.what());
          }
        }
      } else {
        try {
          entry.out.emplace_back(0, Scalar::parse(ring, get_string(e["scalar"], key_path(ep, "scalar"))));
        } catch (const InputError& err) {
          fail(key_path(ep, "scalar"), err.what());
        }
      }
      raw.entries.push_back(std::move(entry));
    }
    out.push_back(std::move(raw));
  }
  if (doc.contains("max_arity")) {
    const int max = get_int(doc["max_arity"], "max_arity");
    for (const auto& op : out)
      if (op.inputs > max) fail(key_path(op.path, "arity"), "exceeds max_arity " + std::to_string(max));
  }
  return out;
}

int output_degree(const OpLayout& layout, Letter b) { return layout.out ? layout.out->degree(b) : 0; }

// Degree is checked per nonzero output term, so errors carry their location.
MultiMap build_map(const RawOp& op, const Ring& ring, const OpLayout& layout, Arity arity, Codomain codomain,
                   int degree) {
  MultiMap m(ring, arity, codomain, degree);
  for (const auto& e : op.entries)
    for (std::size_t i = 0; i < e.out.size(); ++i) {
      const auto& [b, c] = e.out[i];
      if (c.is_zero()) continue;
      const int got = output_degree(layout, b) - e.in_degree;
      if (got != degree)
        fail(layout.out ? index_path(key_path(e.path, "out"), i) : key_path(e.path, "scalar"),
             "term has degree " + std::to_string(got) + ", expected " + std::to_string(degree));
      m.add(e.in, b, c);
    }
  return m;
}

void check_ring(const json& doc, const Ring& expected) {
  if (!doc.contains("ring")) fail("ring", "missing field");
  if (!(parse_ring(doc["ring"], "ring") == expected)) fail("ring", "does not match the algebra's ring");
}

void check_basis(const json& doc, const GradedBasis& expected, const std::string& what) {
  if (!doc.contains("basis")) return;
  if (!(parse_basis(doc).generators() == expected.generators())) fail("basis", "does not match the " + what + " basis");
}

std::string name_at(const OpLayout& layout, int pos, int k, Letter letter) {
  const GradedBasis& b = (layout.module_in && pos == k) ? *layout.module_in : *layout.algebra;
  return b.name(letter);
}

json emit_ops(const std::vector<std::pair<std::pair<int, int>, const MultiMap*>>& ops, const OpLayout& layout) {
  json arr = json::array();
  for (const auto& [kl, m] : ops) {
    json op;
    if (layout.marked) op["arity"] = json::array({kl.first, kl.second});
    else op["arity"] = kl.first;
    json entries = json::array();
    for (const auto& [in, comb] : m->entries()) {
      json names = json::array();
      for (std::size_t i = 0; i < in.size(); ++i) names.push_back(name_at(layout, static_cast<int>(i), kl.first, in[i]));
      json e{{"in", names}};
      if (layout.out) {
        json outs = json::array();
        for (const auto& [b, c] : comb) outs.push_back(json{{"c", c.to_string()}, {"b", layout.out->name(b)}});
        e["out"] = outs;
      } else {
        e["scalar"] = comb.begin()->second.to_string();
      }
      entries.push_back(std::move(e));
    }
    op["entries"] = std::move(entries);
    arr.push_back(std::move(op));
  }
  return arr;
}

std::vector<std::pair<std::pair<int, int>, const MultiMap*>> marked_list(const MarkedFamily& f) {
  std::vector<std::pair<std::pair<int, int>, const MultiMap*>> out;
  for (const auto& [kl, m] : f) out.emplace_back(kl, &m);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const AInfAlgebra> parse_algebra(const std::string& text) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"ring", "basis", "unit", "ops", "max_arity"}, {"ring", "basis"});
  const Ring ring = parse_ring(doc["ring"], "ring");
  const GradedBasis basis = parse_basis(doc);
  const OpLayout layout{false, 0, &basis, nullptr, &basis};
  std::map<int, MultiMap> ops;
  for (const auto& op : parse_ops(doc, ring, layout)) {
    if (op.k < 1) fail(key_path(op.path, "arity"), "algebra operations start at arity 1");
    ops.emplace(op.k, build_map(op, ring, layout, Arity::plain(op.k), Codomain::Algebra, op.k - 2));
  }
  try {
    return std::make_shared<const AInfAlgebra>(ring, basis, std::move(ops));
  } catch (const Error& e) {
    fail("ops", e.what());
  }
}

std::string emit_algebra(const AInfAlgebra& alg) {
  json doc;
  doc["ring"] = emit_ring(alg.ring());
  doc["basis"] = emit_basis(alg.basis());
  if (auto u = alg.basis().unit()) doc["unit"] = alg.basis().name(*u);
  std::vector<std::pair<std::pair<int, int>, const MultiMap*>> ops;
  for (const auto& [i, m] : alg.ops()) ops.push_back({{i, 0}, &m});
  const OpLayout layout{false, 0, &alg.basis(), nullptr, &alg.basis()};
  doc["ops"] = emit_ops(ops, layout);
  doc["max_arity"] = alg.max_arity();
  return dump(doc);
}

std::shared_ptr<const AInfBimodule> parse_bimodule(const std::string& text, std::shared_ptr<const AInfAlgebra> alg,
                                                   BimoduleKind kind) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"ring", "basis", "unit", "ops", "max_arity"}, {"ring", "basis"});
  check_ring(doc, alg->ring());
  const GradedBasis basis = parse_basis(doc);
  const OpLayout layout{true, 1, &alg->basis(), &basis, &basis};
  MarkedFamily ops;
  for (const auto& op : parse_ops(doc, alg->ring(), layout))
    ops.emplace(std::pair{op.k, op.l},
                build_map(op, alg->ring(), layout, Arity::marked(op.k, op.l), Codomain::Module, op.k + op.l - 1));
  try {
    return std::make_shared<const AInfBimodule>(std::move(alg), basis, std::move(ops), kind);
  } catch (const Error& e) {
    fail("ops", e.what());
  }
}

std::string emit_bimodule(const AInfBimodule& bm) {
  json doc;
  doc["ring"] = emit_ring(bm.algebra().ring());
  doc["basis"] = emit_basis(bm.basis());
  if (auto u = bm.basis().unit()) doc["unit"] = bm.basis().name(*u);
  const OpLayout layout{true, 1, &bm.algebra().basis(), &bm.basis(), &bm.basis()};
  doc["ops"] = emit_ops(marked_list(bm.ops()), layout);
  doc["max_arity"] = bm.max_arity();
  return dump(doc);
}

std::shared_ptr<const BimoduleMorphism> parse_morphism(const std::string& text,
                                                       std::shared_ptr<const AInfBimodule> source,
                                                       std::shared_ptr<const AInfBimodule> target) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"ring", "basis", "ops", "max_arity"}, {"ring"});
  const Ring ring = source->algebra().ring();
  check_ring(doc, ring);
  check_basis(doc, target->basis(), "target module");
  const OpLayout layout{true, 1, &source->algebra().basis(), &source->basis(), &target->basis()};
  MarkedFamily ops;
  for (const auto& op : parse_ops(doc, ring, layout))
    ops.emplace(std::pair{op.k, op.l},
                build_map(op, ring, layout, Arity::marked(op.k, op.l), Codomain::Module, op.k + op.l));
  try {
    return std::make_shared<const BimoduleMorphism>(std::move(source), std::move(target), std::move(ops));
  } catch (const Error& e) {
    fail("ops", e.what());
  }
}

std::string emit_morphism(const BimoduleMorphism& f) {
  json doc;
  doc["ring"] = emit_ring(f.source().algebra().ring());
  const OpLayout layout{true, 1, &f.source().algebra().basis(), &f.source().basis(), &f.target().basis()};
  doc["ops"] = emit_ops(marked_list(f.ops()), layout);
  doc["max_arity"] = f.max_arity();
  return dump(doc);
}

std::shared_ptr<const InnerProduct> parse_inner_product(const std::string& text,
                                                        std::shared_ptr<const AInfAlgebra> alg) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"ring", "basis", "ops", "max_arity"}, {"ring"});
  check_ring(doc, alg->ring());
  check_basis(doc, alg->basis(), "algebra");
  const OpLayout layout{true, 2, &alg->basis(), nullptr, nullptr};
  MarkedFamily ops;
  for (const auto& op : parse_ops(doc, alg->ring(), layout))
    ops.emplace(std::pair{op.k, op.l},
                build_map(op, alg->ring(), layout, Arity::plain(op.k + op.l + 2), Codomain::Scalar, op.k + op.l));
  try {
    return std::make_shared<const InnerProduct>(std::move(alg), std::move(ops));
  } catch (const Error& e) {
    fail("ops", e.what());
  }
}

std::string emit_inner_product(const InnerProduct& ip) {
  json doc;
  doc["ring"] = emit_ring(ip.algebra().ring());
  const OpLayout layout{true, 2, &ip.algebra().basis(), nullptr, nullptr};
  doc["ops"] = emit_ops(marked_list(ip.pairings()), layout);
  doc["max_arity"] = ip.max_arity();
  return dump(doc);
}

HochschildCochain parse_cochain(const std::string& text, std::shared_ptr<const AInfBimodule> coefficients) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"ring", "basis", "ops", "max_arity", "degree"}, {"ring"});
  const Ring ring = coefficients->algebra().ring();
  check_ring(doc, ring);
  check_basis(doc, coefficients->basis(), "coefficient module");
  const OpLayout layout{false, 0, &coefficients->algebra().basis(), nullptr, &coefficients->basis()};
  const auto raw = parse_ops(doc, ring, layout);
  std::optional<int> degree;
  if (doc.contains("degree")) degree = get_int(doc["degree"], "degree");
  if (!degree)
    for (const auto& op : raw)
      for (const auto& e : op.entries)
        for (const auto& [b, c] : e.out)
          if (!degree && !c.is_zero()) degree = output_degree(layout, b) - e.in_degree + 1 - op.k;
  const int D = degree.value_or(0);
  std::map<int, MultiMap> comps;
  for (const auto& op : raw)
    comps.emplace(op.k, build_map(op, ring, layout, Arity::plain(op.k), Codomain::Module, D - 1 + op.k));
  try {
    return HochschildCochain::from_components(std::move(coefficients), comps, D);
  } catch (const Error& e) {
    fail("ops", e.what());
  }
}

std::string emit_cochain(const HochschildCochain& c) {
  json doc;
  doc["ring"] = emit_ring(c.coefficients().algebra().ring());
  doc["degree"] = c.degree();
  std::vector<std::pair<std::pair<int, int>, const MultiMap*>> ops;
  const auto comps = c.components();
  for (const auto& [j, m] : comps) ops.push_back({{j, 0}, &m});
  const OpLayout layout{false, 0, &c.coefficients().algebra().basis(), nullptr, &c.coefficients().basis()};
  doc["ops"] = emit_ops(ops, layout);
  doc["max_arity"] = c.max_arity();
  return dump(doc);
}

namespace {

diagrams::PlanarTree parse_tree(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get_ref<const std::string&>() != "leaf") fail(path, "expected \"leaf\" or {\"m\": [...]}");
    return diagrams::PlanarTree::leaf();
  }
  require_keys(j, path, {"m"}, {"m"});
  const std::string mp = key_path(path, "m");
  const json& kids = get_array(j["m"], mp);
  if (kids.size() < 2) fail(mp, "a multiplication needs at least two inputs");
  diagrams::PlanarTree t;
  for (std::size_t i = 0; i < kids.size(); ++i) t.children.push_back(parse_tree(kids[i], index_path(mp, i)));
  return t;
}

json emit_tree(const diagrams::PlanarTree& t) {
  if (t.is_leaf()) return "leaf";
  json kids = json::array();
  for (const auto& c : t.children) kids.push_back(emit_tree(c));
  return json{{"m", kids}};
}

}  // namespace

diagrams::Diagram parse_diagram(const std::string& text) {
  const json doc = parse_json(text);
  require_keys(doc, "", {"r", "s", "slots"}, {"r", "s", "slots"});
  diagrams::Diagram d;
  d.r = get_int(doc["r"], "r");
  d.s = get_int(doc["s"], "s");
  const json& slots = get_array(doc["slots"], "slots");
  for (std::size_t i = 0; i < slots.size(); ++i) d.slots.push_back(parse_tree(slots[i], index_path("slots", i)));
  try {
    diagrams::validate(d);
  } catch (const InputError& e) {
    fail("slots", e.what());
  }
  return d;
}

std::string emit_diagram(const diagrams::Diagram& d) {
  json slots = json::array();
  for (const auto& t : d.slots) slots.push_back(emit_tree(t));
  return json{{"r", d.r}, {"s", d.s}, {"slots", slots}}.dump() + "\n";
}

std::string report_json(const CheckReport& r) {
  json defects = json::array();
  for (const auto& d : r.defects)
    defects.push_back(json{{"location", d.location()}, {"word", d.word_text}, {"value", d.value_text}});
  return dump(json{{"status", r.passed ? "pass" : "fail"}, {"bound", r.bound}, {"defects", defects}});
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " (bound " << r.bound << ", " << r.defects.size()
     << (r.defects.size() == 1 ? " defect)\n" : " defects)\n");
  for (const auto& d : r.defects) os << "  " << d.location() << ": " << d.word_text << " -> " << d.value_text << "\n";
  return os.str();
}

}  // namespace ainf::io
