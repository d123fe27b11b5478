#include "ainf/hoch.hpp"

#include <algorithm>

namespace ainf {

namespace {

// Components of a map on unmarked words, read off on words of length 0..bound.
Coderivation extract(const std::function<Vector(const Word&)>& fn, const AInfBimodule& M, int degree, int bound) {
  Coderivation out{M.algebra().ring(), degree, Codomain::Module, {}};
  for (int n = 0; n <= bound; ++n) {
    MultiMap m(out.ring, Arity::plain(n), Codomain::Module, degree);
    for (const Word& w : basis_words(M.algebra().basis().size(), n)) {
      const Vector v = project_to_generators(fn(w));
      for (const auto& [o, c] : v.terms()) m.add(w.letters, o.letters[0], c);
    }
    if (!m.is_zero()) out.components.emplace(n, std::move(m));
  }
  return out;
}

MultiMap retarget(const MultiMap& m, Codomain c) {
  MultiMap out(m.ring(), m.arity(), c, m.degree());
  for (const auto& [in, comb] : m.entries())
    for (const auto& [o, x] : comb) out.add(in, o, x);
  return out;
}

void require_mode(const Ring& ring, SignMode mode) {
  if (mode == SignMode::Mod2 && !ring.is_char2())
    throw Error("ring " + ring.name() + " needs --experimental-signs; the default mode is Z/2 only");
}

void require_self(const HochschildCochain& f, const HochschildCochain& g) {
  if (f.coefficients().kind() != BimoduleKind::Self || g.coefficients().kind() != BimoduleKind::Self)
    throw Error("operation needs cochains with coefficients in the algebra itself");
  if (!(f.coefficients().algebra() == g.coefficients().algebra())) throw Error("cochains over different algebras");
}

}  // namespace

HochschildCochain cochain_from_map(std::shared_ptr<const AInfBimodule> coefficients,
                                   const std::function<Vector(const Word&)>& fn, int degree, int bound) {
  Coderivation c = extract(fn, *coefficients, degree, bound);
  return HochschildCochain(std::move(coefficients), std::move(c));
}

namespace {

int algebra_arity(const AInfBimodule& M) { return std::max(M.algebra().max_arity(), M.max_arity()); }

}  // namespace

HochschildCochain::HochschildCochain(std::shared_ptr<const AInfBimodule> coefficients, Coderivation suspended)
    : coefficients_(std::move(coefficients)), suspended_(std::move(suspended)) {
  if (!coefficients_) throw InputError("cochain without coefficients");
  if (suspended_.target != Codomain::Module) throw ArityError("cochains land in the coefficient module");
  for (auto it = suspended_.components.begin(); it != suspended_.components.end();)
    it = it->second.is_zero() ? suspended_.components.erase(it) : std::next(it);
}

HochschildCochain HochschildCochain::from_components(std::shared_ptr<const AInfBimodule> coefficients,
                                                     const std::map<int, MultiMap>& components,
                                                     std::optional<int> degree) {
  const Grading plain(coefficients->algebra().basis(), nullptr, false);
  const std::vector<int> out = coefficients->basis().degrees();
  Coderivation c{coefficients->algebra().ring(), 0, Codomain::Module, {}};
  std::optional<int> inferred;
  for (const auto& [j, f] : components) {
    if (f.arity() != Arity::plain(j)) throw ArityError("cochain component " + std::to_string(j) + " has the wrong arity");
    if (f.codomain() != Codomain::Module) throw ArityError("cochain components land in the coefficient module");
    f.validate(plain, out);
    if (f.is_zero()) continue;
    MultiMap F = suspend(f, plain);
    if (inferred && *inferred != F.degree()) throw DegreeError("cochain components have inconsistent degrees");
    inferred = F.degree();
    c.components.emplace(j, std::move(F));
  }
  if (inferred && degree && *degree != *inferred)
    throw DegreeError("declared degree " + std::to_string(*degree) + " but components have degree " +
                      std::to_string(*inferred));
  c.degree = inferred.value_or(degree.value_or(0));
  return HochschildCochain(std::move(coefficients), std::move(c));
}

HochschildCochain HochschildCochain::zero(std::shared_ptr<const AInfBimodule> coefficients, int degree) {
  Ring r = coefficients->algebra().ring();
  return HochschildCochain(std::move(coefficients), Coderivation{r, degree, Codomain::Module, {}});
}

MultiMap HochschildCochain::component(int j) const {
  const Grading plain(coefficients_->algebra().basis(), nullptr, false);
  auto it = suspended_.components.find(j);
  if (it == suspended_.components.end())
    return MultiMap(suspended_.ring, Arity::plain(j), Codomain::Module, suspended_.degree + j - 1);
  return desuspend(it->second, plain);
}

std::map<int, MultiMap> HochschildCochain::components() const {
  std::map<int, MultiMap> out;
  for (const auto& [j, F] : suspended_.components) out.emplace(j, component(j));
  return out;
}

bool HochschildCochain::is_zero() const { return suspended_.components.empty(); }

HochschildCochain HochschildCochain::operator+(const HochschildCochain& o) const {
  if (!(*coefficients_ == *o.coefficients_)) throw Error("adding cochains with different coefficients");
  if (!is_zero() && !o.is_zero() && degree() != o.degree()) throw DegreeError("adding cochains of different degrees");
  Coderivation c = is_zero() ? o.suspended_ : suspended_;
  const Coderivation& other = is_zero() ? suspended_ : o.suspended_;
  for (const auto& [j, F] : other.components) {
    auto it = c.components.find(j);
    if (it == c.components.end()) c.components.emplace(j, F);
    else it->second = it->second + F;
  }
  return HochschildCochain(coefficients_, std::move(c));
}

HochschildCochain HochschildCochain::scaled(const Scalar& s) const {
  Coderivation c = suspended_;
  for (auto& [j, F] : c.components) F = F.scaled(s);
  return HochschildCochain(coefficients_, std::move(c));
}

HochschildCochain HochschildCochain::operator-(const HochschildCochain& o) const {
  return *this + o.scaled(-Scalar::one(o.suspended_.ring));
}

HochschildCochain delta(const HochschildCochain& f, std::optional<int> bound) {
  const AInfBimodule& M = f.coefficients();
  const int n_max = bound.value_or(std::max(f.max_arity(), f.max_arity() + algebra_arity(M) - 1));
  const Grading g = M.grading(true);
  const Coderivation& D = M.algebra().bar_differential();
  const ModuleDifferential& DM = M.differential();
  const Coderivation& F = f.suspended();
  const Sign s = Sign::from_parity(f.degree() < 0 ? -f.degree() : f.degree());
  auto fn = [&](const Word& w) { return DM.apply(g, F.apply(g, w)) - F.apply(g, D.apply(g, w)) * s; };
  return HochschildCochain(f.coefficients_ptr(), extract(fn, M, f.degree() - 1, n_max));
}

HochschildCochain cup(const HochschildCochain& f, const HochschildCochain& g, SignMode mode, std::optional<int> bound) {
  require_self(f, g);
  const AInfBimodule& M = f.coefficients();
  const AInfAlgebra& A = M.algebra();
  require_mode(A.ring(), mode);
  const int n_max = bound.value_or(std::max(0, A.max_arity() - 2 + f.max_arity() + g.max_arity()));
  const Grading gr = A.grading(true);
  std::map<int, MultiMap> Fa, Ga;
  for (const auto& [j, m] : f.suspended().components) Fa.emplace(j, retarget(m, Codomain::Algebra));
  for (const auto& [j, m] : g.suspended().components) Ga.emplace(j, retarget(m, Codomain::Algebra));
  const Coderivation& D = A.bar_differential();
  const Scalar one = Scalar::one(A.ring());

  auto fn = [&](const Word& w) {
    Vector out(A.ring());
    const int n = static_cast<int>(w.size());
    for (const auto& [p, G] : Ga)
      for (int s2 = 0; s2 + p <= n; ++s2) {
        Vector after_g(A.ring());
        insert_block(w, static_cast<std::size_t>(s2), G, gr, one, after_g);
        if (after_g.is_zero()) continue;
        for (const auto& [l, F] : Fa)
          for (int s1 = 0; s1 + l <= s2; ++s1) {
            Vector after_f(A.ring());
            for (const auto& [u, c] : after_g.terms()) insert_block(u, static_cast<std::size_t>(s1), F, gr, c, after_f);
            for (const auto& [u, c] : after_f.terms()) {
              auto it = D.components.find(static_cast<int>(u.size()));
              if (it != D.components.end()) insert_block(u, 0, it->second, gr, c, out);
            }
          }
      }
    Vector marked(A.ring());
    for (const auto& [u, c] : out.terms()) marked.add(Word{u.letters, 0, true}, c);
    return marked;
  };
  return HochschildCochain(f.coefficients_ptr(), extract(fn, M, f.degree() + g.degree() - 1, n_max));
}

HochschildCochain circle(const HochschildCochain& f, const HochschildCochain& g, SignMode mode,
                         std::optional<int> bound) {
  require_self(f, g);
  const AInfBimodule& M = f.coefficients();
  const AInfAlgebra& A = M.algebra();
  require_mode(A.ring(), mode);
  const int n_max = bound.value_or(std::max(0, f.max_arity() + g.max_arity() - 1));
  const Grading gr = A.grading(true);
  std::map<int, MultiMap> Fa, Ga;
  for (const auto& [j, m] : f.suspended().components) Fa.emplace(j, retarget(m, Codomain::Algebra));
  for (const auto& [j, m] : g.suspended().components) Ga.emplace(j, retarget(m, Codomain::Algebra));
  const Scalar one = Scalar::one(A.ring());

  auto fn = [&](const Word& w) {
    Vector out(A.ring());
    const int n = static_cast<int>(w.size());
    for (const auto& [p, G] : Ga)
      for (int s = 0; s + p <= n; ++s) {
        Vector after_g(A.ring());
        insert_block(w, static_cast<std::size_t>(s), G, gr, one, after_g);
        auto it = Fa.find(n - p + 1);
        if (it == Fa.end()) continue;
        for (const auto& [u, c] : after_g.terms()) insert_block(u, 0, it->second, gr, c, out);
      }
    Vector marked(A.ring());
    for (const auto& [u, c] : out.terms()) marked.add(Word{u.letters, 0, true}, c);
    return marked;
  };
  return HochschildCochain(f.coefficients_ptr(), extract(fn, M, f.degree() + g.degree(), n_max));
}

HochschildCochain bracket(const HochschildCochain& f, const HochschildCochain& g, SignMode mode,
                          std::optional<int> bound) {
  const int n_max = bound.value_or(std::max(0, f.max_arity() + g.max_arity() - 1));
  const HochschildCochain fg = circle(f, g, mode, n_max);
  const HochschildCochain gf = circle(g, f, mode, n_max);
  const long long e = static_cast<long long>(f.degree()) * g.degree();
  return fg - gf.scaled(Scalar::of(fg.suspended().ring, Sign::from_parity(e < 0 ? -e : e)));
}

HochschildCochain connes_b(const HochschildCochain& f, SignMode mode) {
  const AInfBimodule& M = f.coefficients();
  const AInfAlgebra& A = M.algebra();
  require_mode(A.ring(), mode);
  if (M.kind() != BimoduleKind::DualSelf) throw Error("Connes' operator needs coefficients in the dual algebra");
  const auto unit = A.basis().unit();
  if (!unit) throw InputError("Connes' operator needs a designated unit");
  const GradedBasis& B = A.basis();

  std::map<int, MultiMap> out;
  for (const auto& [j, fj] : f.components()) {
    if (j == 0) continue;
    MultiMap b(A.ring(), Arity::plain(j - 1), Codomain::Module, fj.degree());
    for (const Word& w : basis_words(B.size(), j - 1, false)) {
      for (std::size_t q = 0; q < B.size(); ++q) {
        std::vector<Letter> full = w.letters;
        full.push_back(static_cast<Letter>(q));
        Scalar total = Scalar::zero(A.ring());
        for (int t = 0; t < j; ++t) {
          std::vector<Letter> rot(full.begin() + t, full.end());
          rot.insert(rot.end(), full.begin(), full.begin() + t);
          const Combination* comb = fj.find(rot);
          if (!comb) continue;
          auto it = comb->find(*unit);
          if (it == comb->end()) continue;
          Sign s;
          if (mode == SignMode::ExperimentalSigned) {
            long long head = 0, tail = 0;
            for (int i = 0; i < t; ++i) head += B.degree(full[i]) + 1;
            for (int i = t; i < j; ++i) tail += B.degree(full[i]) + 1;
            s = koszul_sign(head < 0 ? -head : head, tail < 0 ? -tail : tail);
          }
          total += it->second * s;
        }
        if (!total.is_zero()) b.add(w.letters, static_cast<Letter>(q), total);
      }
    }
    out.emplace(j - 1, std::move(b));
  }
  return HochschildCochain::from_components(f.coefficients_ptr(), out, f.degree() + 1);
}

bool connes_b_squares_to_zero(const HochschildCochain& f, SignMode mode) {
  return connes_b(connes_b(f, mode), mode).is_zero();
}

}  // namespace ainf
