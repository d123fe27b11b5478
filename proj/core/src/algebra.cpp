#include "ainf/algebra.hpp"

#include <set>

#include "ainf/parallel.hpp"

namespace ainf {

std::string Defect::location() const {
  if (l < 0) return "k=" + std::to_string(k);
  return "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

AInfAlgebra::AInfAlgebra(Ring ring, GradedBasis basis, std::map<int, MultiMap> ops)
    : ring_(ring), basis_(std::move(basis)) {
  const Grading plain = grading(false);
  const std::vector<int> out = basis_.degrees();
  bar_ = Coderivation{ring_, -1, Codomain::Algebra, {}};
  for (auto& [i, m] : ops) {
    if (i < 1) throw ArityError("algebra operations start at arity 1");
    if (m.arity().is_marked() || m.arity().inputs() != i) throw ArityError("m_" + std::to_string(i) + " has the wrong arity");
    if (m.codomain() != Codomain::Algebra) throw ArityError("m_" + std::to_string(i) + " must land in the algebra");
    if (!(m.ring() == ring_)) throw InputError("m_" + std::to_string(i) + " is over the wrong ring");
    if (m.degree() != i - 2) throw DegreeError("m_" + std::to_string(i) + " must have degree " + std::to_string(i - 2));
    m.validate(plain, out);
    if (m.is_zero()) continue;
    bar_.components.emplace(i, suspend(m, plain));
    ops_.emplace(i, std::move(m));
  }
}

const MultiMap* AInfAlgebra::op(int i) const {
  auto it = ops_.find(i);
  return it == ops_.end() ? nullptr : &it->second;
}

int AInfAlgebra::max_arity() const { return ops_.empty() ? 0 : ops_.rbegin()->first; }

MultiMap suspended_component(const AInfAlgebra& alg, int i) {
  auto it = alg.bar_differential().components.find(i);
  if (it != alg.bar_differential().components.end()) return it->second;
  return MultiMap(alg.ring(), Arity::plain(i), Codomain::Algebra, -1);
}

Sign epsilon(int i, int j, int k, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != k) throw ArityError("epsilon needs k degrees");
  if (i < 1 || i > k || j < 1 || j > k - i + 1) throw ArityError("epsilon index out of range");
  long long prefix = 0;
  for (int l = 1; l < j; ++l) prefix += degrees[l - 1];
  const long long e = static_cast<long long>(i) * prefix + static_cast<long long>(j - 1) * (i + 1) + k - i;
  return Sign::from_parity(e < 0 ? -e : e);
}

CheckReport check_relations(const AInfAlgebra& alg, const CheckOptions& opts) {
  CheckReport report;
  report.bound = opts.bound;
  const Grading g = alg.grading(true);
  const Coderivation& D = alg.bar_differential();

  std::vector<Word> words;
  for (int n = 1; n <= opts.bound; ++n) {
    auto ws = basis_words(alg.basis().size(), n);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  auto value_of = [&](const Word& w) { return project_to_generators(D.apply(g, D.apply(g, w))); };

  auto record = [&](const Word& w, Vector v) {
    report.defects.push_back(Defect{static_cast<int>(w.size()), -1, w, v, format_word(w, alg.basis()),
                                    format_vector(v, alg.basis())});
  };

  if (!opts.exhaustive) {
    for (const Word& w : words) {
      Vector v = value_of(w);
      if (!v.is_zero()) {
        record(w, std::move(v));
        break;
      }
    }
  } else {
    std::vector<Vector> values(words.size());
    parallel_for(words.size(), [&](std::size_t i) { values[i] = value_of(words[i]); }, opts.workers);
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!values[i].is_zero()) record(words[i], std::move(values[i]));
  }
  report.passed = report.defects.empty();
  return report;
}

Vector relation_term(const AInfAlgebra& alg, int i, int j, const Word& w) {
  const int k = static_cast<int>(w.size());
  if (i < 1 || i > k || j < 1 || j > k - i + 1) throw ArityError("relation term index out of range");
  const Grading g = alg.grading(true);
  const MultiMap inner = suspended_component(alg, i);
  const MultiMap outer = suspended_component(alg, k - i + 1);
  Vector mid(alg.ring());
  insert_block(w, static_cast<std::size_t>(j - 1), inner, g, Scalar::one(alg.ring()), mid);
  Vector out(alg.ring());
  for (const auto& [u, c] : mid.terms()) insert_block(u, 0, outer, g, c, out);
  return out;
}

Sign derived_relation_sign(int i, int j, std::span<const int> degrees) {
  const int k = static_cast<int>(degrees.size());
  if (i < 1 || i > k || j < 1 || j > k - i + 1) throw ArityError("relation term index out of range");
  const Ring ring = Ring::integers();

  // Generators a_1..a_k, x = m_i(block), y = m_{k-i+1}(.., x, ..).
  std::vector<Generator> gens;
  for (int l = 0; l < k; ++l) gens.push_back({"a" + std::to_string(l + 1), degrees[l]});
  int block = 0, rest = 0;
  for (int l = 0; l < k; ++l) (l >= j - 1 && l < j - 1 + i ? block : rest) += degrees[l];
  const int x_deg = block + i - 2;
  const int outer_arity = k - i + 1;
  const int y_deg = x_deg + rest + outer_arity - 2;
  gens.push_back({"x", x_deg});
  gens.push_back({"y", y_deg});
  const Letter x = static_cast<Letter>(k), y = static_cast<Letter>(k + 1);

  std::vector<Letter> inner_in, outer_in;
  for (int l = 0; l < k; ++l) {
    if (l >= j - 1 && l < j - 1 + i) inner_in.push_back(static_cast<Letter>(l));
    if (l == j - 1) outer_in.push_back(x);
    if (l < j - 1 || l >= j - 1 + i) outer_in.push_back(static_cast<Letter>(l));
  }
  std::map<int, MultiMap> ops;
  auto& inner = ops.try_emplace(i, ring, Arity::plain(i), Codomain::Algebra, i - 2).first->second;
  inner.add(inner_in, x, Scalar::one(ring));
  auto& outer = ops.try_emplace(outer_arity, ring, Arity::plain(outer_arity), Codomain::Algebra, outer_arity - 2)
                    .first->second;
  outer.add(outer_in, y, Scalar::one(ring));

  AInfAlgebra alg(ring, GradedBasis(std::move(gens)), std::move(ops));
  std::vector<Letter> letters;
  for (int l = 0; l < k; ++l) letters.push_back(static_cast<Letter>(l));
  const Grading g = alg.grading(true);
  const Coderivation& D = alg.bar_differential();
  const Vector v = project_to_generators(D.apply(g, D.apply(g, plain_word(letters))));
  const Scalar c = v.coefficient(plain_word({y}));
  if (c.value() == 1) return Sign{};
  if (c.value() == -1) return Sign::minus();
  throw Error("derived relation coefficient is not a sign: " + c.to_string());
}

bool relation_sign_agrees(int i, int j, std::span<const int> degrees) {
  const int k = static_cast<int>(degrees.size());
  return derived_relation_sign(i, j, degrees) == epsilon(i, j, k, degrees) * suspension_sign(degrees);
}

bool sign_oracle_agreement(const AInfAlgebra& alg, int k_bound) {
  std::set<int> palette_set;
  for (const auto& g : alg.basis().generators()) palette_set.insert(g.degree);
  const std::vector<int> palette(palette_set.begin(), palette_set.end());
  if (palette.empty()) return true;
  for (int k = 1; k <= k_bound; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k), 0), degs(static_cast<std::size_t>(k));
    while (true) {
      for (int l = 0; l < k; ++l) degs[l] = palette[idx[l]];
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - i + 1; ++j)
          if (!relation_sign_agrees(i, j, degs)) return false;
      int p = 0;
      while (p < k && ++idx[p] == static_cast<int>(palette.size())) idx[p++] = 0;
      if (p == k) break;
    }
  }
  return true;
}

AInfAlgebra from_dga(Ring ring, GradedBasis basis, const MultiMap& d, const MultiMap& mu) {
  if (d.arity() != Arity::plain(1) || d.degree() != -1) throw InputError("differential must be unary of degree -1");
  if (mu.arity() != Arity::plain(2) || mu.degree() != 0) throw InputError("product must be binary of degree 0");
  std::map<int, MultiMap> ops;
  ops.emplace(1, d);
  ops.emplace(2, mu);
  return AInfAlgebra(ring, std::move(basis), std::move(ops));
}

}  // namespace ainf
