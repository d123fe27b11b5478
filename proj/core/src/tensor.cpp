#include "ainf/tensor.hpp"

namespace ainf {

void PairVector::add(const TensorPair& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PairVector& PairVector::operator-=(const PairVector& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
  Word r;
  r.suspended = w.suspended;
  r.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
  if (w.mark >= static_cast<int>(from) && w.mark < static_cast<int>(to)) r.mark = w.mark - static_cast<int>(from);
  return r;
}

void enumerate(std::size_t alphabet, std::vector<Letter>& cur, std::size_t length,
               const std::function<void(const std::vector<Letter>&)>& f) {
  if (cur.size() == length) {
    f(cur);
    return;
  }
  for (std::size_t a = 0; a < alphabet; ++a) {
    cur.push_back(static_cast<Letter>(a));
    enumerate(alphabet, cur, length, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TensorPair> comultiply(const Word& w) {
  if (w.marked()) throw ArityError("comultiply expects an unmarked word");
  std::vector<TensorPair> out;
  for (std::size_t p = 0; p <= w.size(); ++p) out.emplace_back(slice(w, 0, p), slice(w, p, w.size()));
  return out;
}

std::vector<TensorPair> comultiply_marked(const Word& w) {
  if (!w.marked()) throw ArityError("comultiply_marked expects a marked word");
  std::vector<TensorPair> out;
  for (std::size_t p = 0; p <= w.size(); ++p) out.emplace_back(slice(w, 0, p), slice(w, p, w.size()));
  return out;
}

std::vector<Word> basis_words(std::size_t alphabet, int length, bool suspended) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  enumerate(alphabet, cur, static_cast<std::size_t>(length),
            [&](const std::vector<Letter>& l) { out.push_back(Word{l, -1, suspended}); });
  return out;
}

std::vector<Word> marked_basis_words(std::size_t alphabet, std::size_t marked_alphabet, int k, int l, bool suspended) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  const std::size_t n = static_cast<std::size_t>(k + l + 1);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      out.push_back(Word{cur, k, suspended});
      return;
    }
    const std::size_t size = static_cast<int>(pos) == k ? marked_alphabet : alphabet;
    for (std::size_t a = 0; a < size; ++a) {
      cur.push_back(static_cast<Letter>(a));
      rec(pos + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Vector Coderivation::apply(const Grading& g, const Word& w) const {
  if (w.marked()) throw ArityError("coderivation applied to a marked word");
  Vector out(ring);
  const Scalar one = Scalar::one(ring);
  for (const auto& [n, m] : components) {
    if (n > static_cast<int>(w.size())) break;
    for (std::size_t start = 0; start + n <= w.size(); ++start) insert_block(w, start, m, g, one, out);
  }
  return out;
}

Vector Coderivation::apply(const Grading& g, const Vector& v) const {
  Vector out(ring);
  for (const auto& [w, c] : v.terms()) out += apply(g, w) * c;
  return out;
}

bool operator==(const Coderivation& a, const Coderivation& b) {
  auto nonzero = [](const Coderivation& c) {
    std::map<int, const MultiMap*> m;
    for (const auto& [n, f] : c.components)
      if (!f.is_zero()) m[n] = &f;
    return m;
  };
  auto na = nonzero(a), nb = nonzero(b);
  if (!(a.ring == b.ring) || a.target != b.target || na.size() != nb.size()) return false;
  if (!na.empty() && a.degree != b.degree) return false;
  for (auto ia = na.begin(), ib = nb.begin(); ia != na.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(*ia->second == *ib->second)) return false;
  return true;
}

namespace {

Coderivation lift_single(const MultiMap& component, Codomain target) {
  if (component.arity().is_marked()) throw ArityError("coderivation components take unmarked inputs");
  if (component.codomain() != target) throw ArityError("component codomain does not match the lift");
  Coderivation c{component.ring(), component.degree(), target, {}};
  c.components.emplace(component.arity().inputs(), component);
  return c;
}

}  // namespace

Coderivation lift_coderivation(const MultiMap& component) { return lift_single(component, Codomain::Algebra); }

Coderivation lift_to_bicomodule(const MultiMap& component) { return lift_single(component, Codomain::Module); }

Vector ModuleDifferential::apply(const Grading& g, const Word& w) const {
  if (!w.marked()) throw ArityError("module differential applied to an unmarked word");
  Vector out(algebra.ring);
  const Scalar one = Scalar::one(algebra.ring);
  const int n = static_cast<int>(w.size());
  for (int start = 0; start < n; ++start) {
    for (int len = 1; start + len <= n; ++len) {
      const bool has_mark = w.mark >= start && w.mark < start + len;
      const MultiMap* m = nullptr;
      if (has_mark) {
        auto it = module.find({w.mark - start, start + len - 1 - w.mark});
        if (it != module.end()) m = &it->second;
      } else {
        auto it = algebra.components.find(len);
        if (it != algebra.components.end()) m = &it->second;
      }
      if (m) insert_block(w, static_cast<std::size_t>(start), *m, g, one, out);
    }
  }
  return out;
}

Vector ModuleDifferential::apply(const Grading& g, const Vector& v) const {
  Vector out(algebra.ring);
  for (const auto& [w, c] : v.terms()) out += apply(g, w) * c;
  return out;
}

ModuleDifferential lift_module_differential(const Coderivation& psi, const MarkedFamily& rho) {
  for (const auto& [kl, m] : rho) {
    if (!m.arity().is_marked() || m.arity().k() != kl.first || m.arity().l() != kl.second)
      throw ArityError("module component shape does not match its index");
    if (m.codomain() != Codomain::Module) throw ArityError("module components must land in the module");
    if (m.degree() != psi.degree && !m.is_zero()) throw DegreeError("module components must share the degree of psi");
  }
  return ModuleDifferential{psi, rho, psi.degree};
}

Vector BicomoduleMap::apply(const Grading& g, const Word& w) const {
  if (!w.marked()) throw ArityError("bicomodule map applied to an unmarked word");
  Vector out(ring);
  const Scalar one = Scalar::one(ring);
  for (const auto& [kl, m] : components) {
    const int start = w.mark - kl.first;
    if (start < 0 || w.mark + kl.second >= static_cast<int>(w.size())) continue;
    insert_block(w, static_cast<std::size_t>(start), m, g, one, out);
  }
  return out;
}

Vector BicomoduleMap::apply(const Grading& g, const Vector& v) const {
  Vector out(ring);
  for (const auto& [w, c] : v.terms()) out += apply(g, w) * c;
  return out;
}

BicomoduleMap lift_morphism(const MarkedFamily& f, Ring ring) {
  std::optional<int> degree;
  for (const auto& [kl, m] : f) {
    if (!m.arity().is_marked() || m.arity().k() != kl.first || m.arity().l() != kl.second)
      throw ArityError("morphism component shape does not match its index");
    if (m.codomain() != Codomain::Module) throw ArityError("morphism components must land in the target module");
    if (m.is_zero()) continue;
    if (degree && *degree != m.degree()) throw DegreeError("morphism components of different degrees");
    degree = m.degree();
  }
  return BicomoduleMap{ring, f, degree.value_or(f.empty() ? 0 : f.begin()->second.degree())};
}

namespace {

PairVector coproduct(const Vector& v) {
  PairVector out(v.ring());
  for (const auto& [w, c] : v.terms())
    for (auto& p : w.marked() ? comultiply_marked(w) : comultiply(w)) out.add(p, c);
  return out;
}

void tensor_left(PairVector& out, const Vector& left, const Word& right, const Scalar& c) {
  for (const auto& [w, x] : left.terms()) out.add({w, right}, x * c);
}

void tensor_right(PairVector& out, const Word& left, const Vector& right, const Scalar& c) {
  for (const auto& [w, x] : right.terms()) out.add({left, w}, x * c);
}

}  // namespace

std::optional<SquareViolation> check_coderivation(const LinearMap& f, const CoderivationCheck& opts) {
  if (!opts.source) throw Error("check_coderivation needs a source grading");
  const Grading& src = *opts.source;
  const bool marked_source =
      opts.kind == CoderivationKind::ModuleDifferential || opts.kind == CoderivationKind::Morphism;
  if (opts.kind == CoderivationKind::ModuleDifferential && !opts.psi)
    throw Error("module differential check needs the algebra coderivation");

  std::vector<Word> words;
  for (int n = 0; n <= opts.bound; ++n) {
    if (!marked_source) {
      auto ws = basis_words(src.plain_size(), n);
      words.insert(words.end(), ws.begin(), ws.end());
    } else {
      for (int k = 0; k <= n; ++k) {
        auto ws = marked_basis_words(src.plain_size(), src.marked_size(), k, n - k);
        words.insert(words.end(), ws.begin(), ws.end());
      }
    }
  }

  const Scalar one = Scalar::one(f.ring);
  for (const Word& w : words) {
    PairVector lhs = coproduct(f.fn(w));
    PairVector rhs(f.ring);
    for (const auto& [u, v] : marked_source ? comultiply_marked(w) : comultiply(w)) {
      const Scalar sign = Scalar::of(f.ring, koszul_sign(f.degree, src.degree(u)));
      switch (opts.kind) {
        case CoderivationKind::Algebra:
        case CoderivationKind::Bicomodule:
          tensor_left(rhs, f.fn(u), v, one);
          tensor_right(rhs, u, f.fn(v), sign);
          break;
        case CoderivationKind::ModuleDifferential:
          if (u.marked()) {
            tensor_left(rhs, f.fn(u), v, one);
            tensor_right(rhs, u, opts.psi->fn(v), sign);
          } else {
            tensor_left(rhs, opts.psi->fn(u), v, one);
            tensor_right(rhs, u, f.fn(v), sign);
          }
          break;
        case CoderivationKind::Morphism:
          if (u.marked()) tensor_left(rhs, f.fn(u), v, one);
          else tensor_right(rhs, u, f.fn(v), sign);
          break;
      }
    }
    if (!(lhs == rhs)) return SquareViolation{w, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

Vector project_to_generators(const Vector& v) {
  Vector out(v.ring());
  for (const auto& [w, c] : v.terms())
    if (w.size() == 1) out.add(w, c);
  return out;
}

Coderivation extract_components(const LinearMap& sigma, const Grading& source, Codomain target, int max_arity) {
  Coderivation c{sigma.ring, sigma.degree, target, {}};
  for (int n = 0; n <= max_arity; ++n) {
    MultiMap m(sigma.ring, Arity::plain(n), target, sigma.degree);
    for (const Word& w : basis_words(source.plain_size(), n)) {
      const Vector v = project_to_generators(sigma.fn(w));
      for (const auto& [out, x] : v.terms()) {
        if (out.marked() != (target == Codomain::Module)) throw ArityError("extracted output lies in the wrong space");
        m.add(w.letters, out.letters[0], x);
      }
    }
    if (!m.is_zero()) c.components.emplace(n, std::move(m));
  }
  return c;
}

MarkedFamily extract_marked_components(const LinearMap& sigma, const Grading& source, int bound) {
  MarkedFamily fam;
  for (int n = 0; n <= bound; ++n) {
    for (int k = 0; k <= n; ++k) {
      MultiMap m(sigma.ring, Arity::marked(k, n - k), Codomain::Module, sigma.degree);
      for (const Word& w : marked_basis_words(source.plain_size(), source.marked_size(), k, n - k)) {
        const Vector v = project_to_generators(sigma.fn(w));
      for (const auto& [out, x] : v.terms()) {
          if (!out.marked()) throw ArityError("extracted output lies in the wrong space");
          m.add(w.letters, out.letters[0], x);
        }
      }
      if (!m.is_zero()) fam.emplace(std::pair{k, n - k}, std::move(m));
    }
  }
  return fam;
}

LinearMap as_linear_map(const Coderivation& c, const Grading& g) {
  return LinearMap{c.ring, c.degree, [c, g](const Word& w) { return c.apply(g, w); }};
}

LinearMap as_linear_map(const ModuleDifferential& d, const Grading& g) {
  return LinearMap{d.algebra.ring, d.degree, [d, g](const Word& w) { return d.apply(g, w); }};
}

LinearMap as_linear_map(const BicomoduleMap& f, const Grading& g) {
  return LinearMap{f.ring, f.degree, [f, g](const Word& w) { return f.apply(g, w); }};
}

bool families_equal(const MarkedFamily& a, const MarkedFamily& b) {
  auto strip = [](const MarkedFamily& f) {
    std::map<std::pair<int, int>, const MultiMap*> m;
    for (const auto& [kl, x] : f)
      if (!x.is_zero()) m[kl] = &x;
    return m;
  };
  auto sa = strip(a), sb = strip(b);
  if (sa.size() != sb.size()) return false;
  for (auto ia = sa.begin(), ib = sb.begin(); ia != sa.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(*ia->second == *ib->second)) return false;
  return true;
}

}  // namespace ainf
