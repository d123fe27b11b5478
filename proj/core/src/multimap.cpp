#include "ainf/multimap.hpp"

#include <string>

namespace ainf {

Arity Arity::plain(int n) {
  if (n < 0) throw ArityError("negative arity");
  Arity a;
  a.k_ = n;
  return a;
}

Arity Arity::marked(int k, int l) {
  if (k < 0 || l < 0) throw ArityError("negative arity");
  Arity a;
  a.k_ = k;
  a.l_ = l;
  a.marked_ = true;
  return a;
}

void MultiMap::add(std::vector<Letter> inputs, Letter output, const Scalar& c) {
  if (static_cast<int>(inputs.size()) != arity_.inputs())
    throw ArityError("expected " + std::to_string(arity_.inputs()) + " inputs, got " + std::to_string(inputs.size()));
  if (c.is_zero()) return;
  auto entry = entries_.try_emplace(std::move(inputs)).first;
  auto [it, inserted] = entry->second.try_emplace(output, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entry->second.erase(it);
  }
  if (entry->second.empty()) entries_.erase(entry);
}

const Combination* MultiMap::find(std::span<const Letter> inputs) const {
  auto it = entries_.find(inputs);
  return it == entries_.end() ? nullptr : &it->second;
}

Word input_word(const Arity& a, std::span<const Letter> inputs, bool suspended) {
  Word w{std::vector<Letter>(inputs.begin(), inputs.end()), a.is_marked() ? a.k() : -1, suspended};
  return w;
}

void MultiMap::validate(const Grading& inputs, std::span<const int> outputs) const {
  for (const auto& [in, comb] : entries_) {
    Word w = input_word(arity_, in, false);
    for (std::size_t p = 0; p < w.size(); ++p) {
      const bool m = static_cast<int>(p) == w.mark;
      if (w.letters[p] >= (m ? inputs.marked_size() : inputs.plain_size()))
        throw InputError("input letter out of range");
    }
    const long in_deg = inputs.degree(w);
    for (const auto& [out, c] : comb) {
      if (out >= outputs.size()) throw InputError("output letter out of range");
      if (outputs[out] != in_deg + degree_)
        throw DegreeError("output of degree " + std::to_string(outputs[out]) + " on inputs of degree " +
                          std::to_string(in_deg) + " for a map of degree " + std::to_string(degree_));
    }
  }
}

MultiMap MultiMap::scaled(const Scalar& c) const {
  MultiMap out(ring_, arity_, codomain_, degree_);
  for (const auto& [in, comb] : entries_)
    for (const auto& [o, x] : comb) out.add(in, o, x * c);
  return out;
}

MultiMap MultiMap::operator+(const MultiMap& o) const {
  if (!(arity_ == o.arity_) || codomain_ != o.codomain_) throw ArityError("adding maps of different shapes");
  if (degree_ != o.degree_ && !is_zero() && !o.is_zero()) throw DegreeError("adding maps of different degrees");
  if (is_zero()) return o;
  MultiMap out = *this;
  for (const auto& [in, comb] : o.entries_)
    for (const auto& [x, c] : comb) out.add(in, x, c);
  return out;
}

MultiMap MultiMap::operator-(const MultiMap& o) const { return *this + o.scaled(-Scalar::one(o.ring())); }

namespace {

MultiMap resuspend(const MultiMap& f, const Grading& g, int shift) {
  if (f.codomain() == Codomain::Scalar) throw ArityError("scalar-valued maps are not suspended");
  MultiMap out(f.ring(), f.arity(), f.codomain(), f.degree() + shift);
  std::vector<int> degs;
  for (const auto& [in, comb] : f.entries()) {
    Word w = input_word(f.arity(), in, false);
    degs.clear();
    for (std::size_t p = 0; p < w.size(); ++p) degs.push_back(g.letter(w, p));
    const Sign s = suspension_sign(degs);
    for (const auto& [o, c] : comb) out.add(in, o, c * s);
  }
  return out;
}

}  // namespace

MultiMap suspend(const MultiMap& f, const Grading& unsuspended) {
  return resuspend(f, unsuspended, 1 - f.arity().inputs());
}

MultiMap desuspend(const MultiMap& F, const Grading& unsuspended) {
  return resuspend(F, unsuspended, F.arity().inputs() - 1);
}

void insert_block(const Word& w, std::size_t start, const MultiMap& map, const Grading& g, const Scalar& coeff,
                  Vector& out) {
  const Arity& a = map.arity();
  const std::size_t len = static_cast<std::size_t>(a.inputs());
  if (start + len > w.size()) throw ArityError("block exceeds word");
  const bool block_has_mark = w.mark >= static_cast<int>(start) && w.mark < static_cast<int>(start + len);
  if (block_has_mark != a.is_marked() || (a.is_marked() && w.mark - static_cast<int>(start) != a.k()))
    throw ArityError("map shape does not match the block");

  const Combination* comb = map.find(std::span<const Letter>(w.letters.data() + start, len));
  if (!comb) return;

  const Scalar c = coeff * koszul_sign(map.degree(), g.prefix(w, start));
  const bool to_module = map.codomain() == Codomain::Module;
  if (to_module && w.marked() && !block_has_mark) throw ArityError("word would carry two marks");

  int mark = -1;
  if (block_has_mark || to_module) mark = static_cast<int>(start);
  else if (w.mark >= static_cast<int>(start + len)) mark = w.mark - static_cast<int>(len) + 1;
  else mark = w.mark;

  const bool scalar = map.codomain() == Codomain::Scalar;
  if (scalar) {
    // Scalar outputs drop the block; a mark inside it is consumed.
    if (block_has_mark) mark = -1;
    else if (w.mark >= static_cast<int>(start + len)) mark = w.mark - static_cast<int>(len);
  }
  for (const auto& [o, x] : *comb) {
    Word r;
    r.suspended = w.suspended;
    r.letters.reserve(w.size() - len + 1);
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + start);
    if (!scalar) r.letters.push_back(o);
    r.letters.insert(r.letters.end(), w.letters.begin() + start + len, w.letters.end());
    r.mark = mark;
    out.add(std::move(r), x * c);
  }
}

int TensorFactor::inputs() const {
  if (auto n = std::get_if<int>(&f)) return *n;
  return std::get<const MultiMap*>(f)->arity().inputs();
}

Vector apply_tensor_of_maps(std::span<const TensorFactor> factors, const Word& w, const Grading& g, Ring ring) {
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  for (const auto& f : factors) {
    starts.push_back(pos);
    pos += static_cast<std::size_t>(f.inputs());
  }
  if (pos != w.size()) throw ArityError("tensor factors do not match word length");

  Vector cur(ring);
  cur.add(w, Scalar::one(ring));
  // Right to left, so letters left of each block are still the original ones.
  for (std::size_t i = factors.size(); i-- > 0;) {
    auto m = std::get_if<const MultiMap*>(&factors[i].f);
    if (!m) continue;
    Vector next(ring);
    for (const auto& [word, c] : cur.terms()) insert_block(word, starts[i], **m, g, c, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ainf
