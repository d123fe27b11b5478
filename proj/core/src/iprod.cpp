#include "ainf/iprod.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ainf {

InnerProduct::InnerProduct(std::shared_ptr<const AInfAlgebra> algebra, MarkedFamily pairings)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw InputError("inner product without an algebra");
  const Grading plain = algebra_->grading(false);
  const std::vector<int> scalar_out{0};
  for (auto& [kl, m] : pairings) {
    const auto [k, l] = kl;
    const std::string name = "<>_{" + std::to_string(k) + "," + std::to_string(l) + "}";
    if (m.arity() != Arity::plain(k + l + 2)) throw ArityError(name + " takes k+l+2 inputs");
    if (m.codomain() != Codomain::Scalar) throw ArityError(name + " must be scalar valued");
    if (!(m.ring() == algebra_->ring())) throw InputError(name + " is over the wrong ring");
    if (m.degree() != k + l) throw DegreeError(name + " must have degree " + std::to_string(k + l));
    m.validate(plain, scalar_out);
    if (!m.is_zero()) pairings_.emplace(kl, std::move(m));
  }
}

const MultiMap* InnerProduct::pairing(int k, int l) const {
  auto it = pairings_.find({k, l});
  return it == pairings_.end() ? nullptr : &it->second;
}

int InnerProduct::max_arity() const {
  int n = 0;
  for (const auto& [kl, m] : pairings_) n = std::max(n, kl.first + kl.second + 2);
  return n;
}

InnerProduct from_morphism(const BimoduleMorphism& f) {
  const auto alg = f.source().algebra_ptr();
  if (f.source().kind() != BimoduleKind::Self || !(f.source() == self_bimodule(alg)))
    throw Error("inner products start at the algebra as a bimodule over itself");
  if (f.target().kind() != BimoduleKind::DualSelf || !(f.target() == dual_self_bimodule(alg)))
    throw Error("inner products land in the dual of the algebra");
  const GradedBasis& B = alg->basis();
  MarkedFamily pairings;
  for (const auto& [kl, m] : f.ops()) {
    const auto [k, l] = kl;
    MultiMap p(alg->ring(), Arity::plain(k + l + 2), Codomain::Scalar, k + l);
    for (const auto& [in, comb] : m.entries())
      for (const auto& [q, c] : comb) {
        std::vector<Letter> full = in;
        full.push_back(q);
        p.add(std::move(full), 0, c * Sign::from_parity(std::abs(B.degree(q))));
      }
    pairings.emplace(kl, std::move(p));
  }
  return InnerProduct(alg, std::move(pairings));
}

BimoduleMorphism to_morphism(const InnerProduct& ip) {
  const auto alg = ip.algebra_ptr();
  const GradedBasis& B = alg->basis();
  MarkedFamily ops;
  for (const auto& [kl, p] : ip.pairings()) {
    const auto [k, l] = kl;
    MultiMap f(alg->ring(), Arity::marked(k, l), Codomain::Module, k + l);
    for (const auto& [in, comb] : p.entries()) {
      const Letter q = in.back();
      std::vector<Letter> head(in.begin(), in.end() - 1);
      f.add(std::move(head), q, comb.begin()->second * Sign::from_parity(std::abs(B.degree(q))));
    }
    ops.emplace(kl, std::move(f));
  }
  return BimoduleMorphism(std::make_shared<const AInfBimodule>(self_bimodule(alg)),
                          std::make_shared<const AInfBimodule>(dual_self_bimodule(alg)), std::move(ops));
}

CheckReport check_inner_product(const InnerProduct& ip, const CheckOptions& opts) {
  CheckReport report = check_morphism(to_morphism(ip), opts);
  const GradedBasis& B = ip.algebra().basis();
  for (Defect& d : report.defects) {
    std::ostringstream w;
    w << '<';
    for (std::size_t i = 0; i < d.word.size(); ++i) {
      const std::string& n = B.name(d.word.letters[i]);
      w << (i ? "," : "") << (static_cast<int>(i) == d.word.mark ? "[" + n + "]" : n);
    }
    w << ",_>_{" << d.k << ',' << d.l << '}';
    d.word_text = w.str();
    std::ostringstream v;
    bool first = true;
    for (const auto& [out, c] : d.value.terms()) {
      const Letter q = out.letters[0];
      const Scalar value = c * Sign::from_parity(std::abs(B.degree(q)));
      v << (first ? "" : " + ") << value.to_string() << "*<";
      first = false;
      for (std::size_t i = 0; i < d.word.size(); ++i) v << B.name(d.word.letters[i]) << ',';
      v << B.name(q) << ">_{" << d.k << ',' << d.l << '}';
    }
    d.value_text = first ? "0" : v.str();
  }
  return report;
}

std::string RelationTerm::to_string(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  if (sign) os << (sign->negative() ? "-" : "+");
  os << '<';
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) os << ',';
    const auto& slot = slots[i];
    if (static_cast<int>(i) == merged_slot) {
      os << 'm' << slot.size() << '(';
      for (std::size_t j = 0; j < slot.size(); ++j) os << (j ? "," : "") << labels.at(slot[j]);
      os << ')';
    } else {
      os << labels.at(slot[0]);
    }
  }
  os << ">_{" << r << ',' << s << '}';
  return os.str();
}

namespace {

// Coefficient of the a_n term in the morphism relation at (k,l) on (a_1..a_{n-1}).
Scalar relation_coefficient(const InnerProduct& ip, int k, int n) {
  const BimoduleMorphism F = to_morphism(ip);
  const Grading gm = F.source().grading(true), gn = F.target().grading(true);
  std::vector<Letter> letters(static_cast<std::size_t>(n - 1));
  std::iota(letters.begin(), letters.end(), Letter{0});
  const Word w{letters, k, true};
  const Vector v = project_to_generators(F.lift().apply(gm, F.source().differential().apply(gm, w)) -
                                         F.target().differential().apply(gn, F.lift().apply(gm, w)));
  return v.coefficient(Word{{static_cast<Letter>(n - 1)}, 0, true});
}

Sign as_sign(const Scalar& c) {
  if (c.value() == 1) return Sign{};
  if (c.value() == -1) return Sign::minus();
  throw Error("derived coefficient is not a sign: " + c.to_string());
}

Sign derived_term_sign(const RelationTerm& t, int k, int l, const std::vector<int>& degrees) {
  const int n = k + l + 2;
  const Ring ring = Ring::integers();
  const Scalar one = Scalar::one(ring);
  std::vector<int> all = degrees;
  all.push_back(-(k + l) + 1 - std::accumulate(degrees.begin(), degrees.end(), 0));

  std::vector<Generator> base;
  for (int i = 0; i < n; ++i) base.push_back({"a" + std::to_string(i + 1), all[i]});

  // Differential term <m_1(a_1), a_2, ..>_{k,l}.
  Scalar c_diff;
  {
    auto gens = base;
    gens.push_back({"z", all[0] - 1});
    const Letter z = static_cast<Letter>(n);
    std::map<int, MultiMap> ops;
    MultiMap d(ring, Arity::plain(1), Codomain::Algebra, -1);
    d.add({0}, z, one);
    ops.emplace(1, std::move(d));
    auto alg = std::make_shared<const AInfAlgebra>(ring, GradedBasis(gens), std::move(ops));
    MultiMap p(ring, Arity::plain(n), Codomain::Scalar, k + l);
    std::vector<Letter> in{z};
    for (int i = 1; i < n; ++i) in.push_back(static_cast<Letter>(i));
    p.add(in, 0, one);
    MarkedFamily fam;
    fam.emplace(std::pair{k, l}, std::move(p));
    c_diff = relation_coefficient(InnerProduct(alg, std::move(fam)), k, n);
  }

  Scalar c_term;
  {
    auto gens = base;
    const auto& block = t.slots[static_cast<std::size_t>(t.merged_slot)];
    const int j = static_cast<int>(block.size());
    int block_deg = 0;
    for (int i : block) block_deg += all[i];
    gens.push_back({"x", block_deg + j - 2});
    const Letter x = static_cast<Letter>(n);
    std::map<int, MultiMap> ops;
    MultiMap m(ring, Arity::plain(j), Codomain::Algebra, j - 2);
    std::vector<Letter> m_in;
    for (int i : block) m_in.push_back(static_cast<Letter>(i));
    m.add(m_in, x, one);
    ops.emplace(j, std::move(m));
    auto alg = std::make_shared<const AInfAlgebra>(ring, GradedBasis(gens), std::move(ops));
    MultiMap p(ring, Arity::plain(static_cast<int>(t.slots.size())), Codomain::Scalar, t.r + t.s);
    std::vector<Letter> in;
    for (std::size_t i = 0; i < t.slots.size(); ++i)
      in.push_back(static_cast<int>(i) == t.merged_slot ? x : static_cast<Letter>(t.slots[i][0]));
    p.add(in, 0, one);
    MarkedFamily fam;
    fam.emplace(std::pair{t.r, t.s}, std::move(p));
    c_term = relation_coefficient(InnerProduct(alg, std::move(fam)), k, n);
  }
  // The relation reads (differential terms) = (multiplication terms).
  return as_sign(c_term) * as_sign(c_diff) * Sign::minus();
}

}  // namespace

std::vector<RelationTerm> relation_terms(int k, int l, const std::optional<std::vector<int>>& degrees) {
  if (k < 0 || l < 0) throw ArityError("negative (k,l)");
  const int n = k + l + 2;
  if (degrees && static_cast<int>(degrees->size()) != n - 1) throw ArityError("relation_terms needs k+l+1 degrees");
  const int left = k, right = n - 1;
  std::vector<RelationTerm> out;
  for (int start = 0; start < n; ++start) {
    for (int j = 2; j < n; ++j) {
      std::vector<int> block;
      for (int t = 0; t < j; ++t) block.push_back((start + t) % n);
      const bool has_left = std::find(block.begin(), block.end(), left) != block.end();
      const bool has_right = std::find(block.begin(), block.end(), right) != block.end();
      if (has_left && has_right) continue;
      RelationTerm term;
      // Read the circle from just after the block when the block holds the last input.
      const int from = has_right ? (start + j) % n : 0;
      bool placed = false;
      for (int t = 0; t < n; ++t) {
        const int pos = (from + t) % n;
        if (std::find(block.begin(), block.end(), pos) != block.end()) {
          if (!placed) {
            term.merged_slot = static_cast<int>(term.slots.size());
            term.slots.push_back(block);
            placed = true;
          }
        } else {
          term.slots.push_back({pos});
        }
      }
      for (std::size_t i = 0; i < term.slots.size(); ++i)
        if (std::find(term.slots[i].begin(), term.slots[i].end(), left) != term.slots[i].end())
          term.r = static_cast<int>(i);
      term.s = static_cast<int>(term.slots.size()) - 2 - term.r;
      out.push_back(std::move(term));
    }
  }
  if (degrees)
    for (auto& t : out) t.sign = derived_term_sign(t, k, l, *degrees);
  return out;
}

bool satisfies_relation_conditions(const RelationTerm& t, int k, int l) {
  const int n = k + l + 2;
  const int left = k, right = n - 1;
  if (t.slots.size() < 2 || t.merged_slot < 0 || t.merged_slot >= static_cast<int>(t.slots.size())) return false;
  // Exactly one multiplication, of arity at least two; every other slot a single input.
  for (std::size_t i = 0; i < t.slots.size(); ++i) {
    const std::size_t want_min = static_cast<int>(i) == t.merged_slot ? 2 : 1;
    if (t.slots[i].size() < want_min) return false;
    if (static_cast<int>(i) != t.merged_slot && t.slots[i].size() != 1) return false;
  }
  // (i) reading all inputs gives a cyclic rotation of 0..n-1.
  std::vector<int> flat;
  for (const auto& s : t.slots) flat.insert(flat.end(), s.begin(), s.end());
  if (static_cast<int>(flat.size()) != n) return false;
  for (int i = 1; i < n; ++i)
    if (flat[i] != (flat[0] + i) % n) return false;
  // (ii)/(iii) the last input sits in the last slot, alone or inside the multiplication.
  const auto& last = t.slots.back();
  if (std::find(last.begin(), last.end(), right) == last.end()) return false;
  // (iv) the two special inputs never share the multiplication.
  const auto& m = t.slots[static_cast<std::size_t>(t.merged_slot)];
  if (std::find(m.begin(), m.end(), left) != m.end() && std::find(m.begin(), m.end(), right) != m.end()) return false;
  // (v) the left special input determines r.
  const auto& lslot = t.slots[static_cast<std::size_t>(t.r)];
  if (std::find(lslot.begin(), lslot.end(), left) == lslot.end()) return false;
  return t.r + t.s + 2 == static_cast<int>(t.slots.size()) && t.r >= 0 && t.s >= 0;
}

}  // namespace ainf
