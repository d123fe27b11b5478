#include "ainf/morph.hpp"

#include "ainf/parallel.hpp"

namespace ainf {

BimoduleMorphism::BimoduleMorphism(std::shared_ptr<const AInfBimodule> source,
                                   std::shared_ptr<const AInfBimodule> target, MarkedFamily ops)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw InputError("morphism without source or target");
  if (!(source_->algebra() == target_->algebra())) throw InputError("source and target are over different algebras");
  const Grading plain = source_->grading(false);
  const std::vector<int> out = target_->basis().degrees();
  MarkedFamily suspended;
  for (auto& [kl, m] : ops) {
    const auto [k, l] = kl;
    const std::string name = "f_{" + std::to_string(k) + "," + std::to_string(l) + "}";
    if (m.arity() != Arity::marked(k, l)) throw ArityError(name + " has the wrong shape");
    if (m.codomain() != Codomain::Module) throw ArityError(name + " must land in the target module");
    if (!(m.ring() == source_->algebra().ring())) throw InputError(name + " is over the wrong ring");
    if (m.degree() != k + l) throw DegreeError(name + " must have degree " + std::to_string(k + l));
    m.validate(plain, out);
    if (m.is_zero()) continue;
    suspended.emplace(kl, suspend(m, plain));
    ops_.emplace(kl, std::move(m));
  }
  lift_ = lift_morphism(suspended, source_->algebra().ring());
  lift_.degree = 0;
}

const MultiMap* BimoduleMorphism::op(int k, int l) const {
  auto it = ops_.find({k, l});
  return it == ops_.end() ? nullptr : &it->second;
}

int BimoduleMorphism::max_arity() const {
  int n = 0;
  for (const auto& [kl, m] : ops_) n = std::max(n, kl.first + kl.second + 1);
  return n;
}

CheckReport check_morphism(const BimoduleMorphism& f, const CheckOptions& opts) {
  CheckReport report;
  report.bound = opts.bound;
  const AInfBimodule& M = f.source();
  const AInfBimodule& N = f.target();
  const GradedBasis& A = M.algebra().basis();
  const Grading gm = M.grading(true), gn = N.grading(true);
  const BicomoduleMap& F = f.lift();

  std::vector<Word> words;
  for (int n = 0; n <= opts.bound; ++n)
    for (int k = 0; k <= n; ++k) {
      auto ws = marked_basis_words(A.size(), M.basis().size(), k, n - k);
      words.insert(words.end(), ws.begin(), ws.end());
    }
  auto value_of = [&](const Word& w) {
    return project_to_generators(F.apply(gm, M.differential().apply(gm, w)) -
                                 N.differential().apply(gn, F.apply(gm, w)));
  };
  auto record = [&](const Word& w, Vector v) {
    report.defects.push_back(Defect{w.mark, static_cast<int>(w.size()) - w.mark - 1, w, v,
                                    format_word(w, A, &M.basis()), format_vector(v, A, &N.basis())});
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

namespace {

long long prefix_sum(std::span<const int> degrees, int j) {
  long long s = 0;
  for (int r = 1; r < j; ++r) s += degrees[r - 1];
  return s;
}

Sign parity(long long e) { return Sign::from_parity(e < 0 ? -e : e); }

}  // namespace

Sign morphism_epsilon(int i, int j, int k, int l, std::span<const int> degrees) {
  const int n = k + l + 1;
  if (static_cast<int>(degrees.size()) != n) throw ArityError("morphism epsilon needs k+l+1 degrees");
  if (i < 1 || i > n || j < 1 || j > n - i + 1) throw ArityError("morphism epsilon index out of range");
  return parity(static_cast<long long>(i) * prefix_sum(degrees, j) + static_cast<long long>(j - 1) * (i + 1) + n - i);
}

Sign epsilon_prime(int i, int j, std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  if (i < 1 || i > n || j < 1 || j > n - i + 1) throw ArityError("epsilon' index out of range");
  return parity(static_cast<long long>(i + 1) * (j + 1 + prefix_sum(degrees, j)));
}

Sign derived_morphism_sign(MorphismSide side, int i, int j, int k, std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  const int l = n - k - 1;
  if (k < 0 || l < 0 || i < 1 || j < 1 || j + i - 1 > n) throw ArityError("morphism term index out of range");
  const int b0 = j - 1, b1 = j - 1 + i;  // block [b0, b1), 0-based
  const bool block_has_mark = k >= b0 && k < b1;
  if (side == MorphismSide::Right && !block_has_mark) throw ArityError("right-side terms apply f to the module input");
  const Ring ring = Ring::integers();
  const Scalar one = Scalar::one(ring);

  int block = 0, rest = 0;
  for (int r = 0; r < n; ++r) (r >= b0 && r < b1 ? block : rest) += degrees[r];
  const int outer_k = block_has_mark ? b0 : (k >= b1 ? k - i + 1 : k);
  const int outer_n = n - i + 1;

  std::vector<Generator> agens;
  for (int r = 0; r < n; ++r)
    if (r != k) agens.push_back({"a" + std::to_string(r + 1), degrees[r]});
  // Letter of input r in its own basis.
  auto letter = [&](int r) { return static_cast<Letter>(r < k ? r : r - 1); };

  std::vector<Letter> inner_in, outer_in;
  for (int r = 0; r < n; ++r) {
    if (r >= b0 && r < b1) inner_in.push_back(r == k ? 0 : letter(r));
    if (r == b0) outer_in.push_back(Letter{0xFFFF});
    if (r < b0 || r >= b1) outer_in.push_back(r == k ? 0 : letter(r));
  }
  auto set_outer_x = [&](Letter x) {
    for (auto& c : outer_in)
      if (c == 0xFFFF) c = x;
  };

  std::shared_ptr<const AInfAlgebra> A;
  std::shared_ptr<const AInfBimodule> M, N;
  MarkedFamily fops;
  Letter y = 0;
  if (side == MorphismSide::Right) {
    // f_{r,s}(block) = x in N, then N's b(.., x, ..) = y.
    A = std::make_shared<const AInfAlgebra>(ring, GradedBasis(agens), std::map<int, MultiMap>{});
    M = std::make_shared<const AInfBimodule>(A, GradedBasis({{"m", degrees[k]}}), MarkedFamily{});
    const int x_deg = block + i - 1;
    const int y_deg = x_deg + rest + outer_n - 2;
    MarkedFamily nops;
    MultiMap b(ring, Arity::marked(outer_k, outer_n - 1 - outer_k), Codomain::Module, outer_n - 2);
    set_outer_x(0);
    b.add(outer_in, 1, one);
    nops.emplace(std::pair{outer_k, outer_n - 1 - outer_k}, std::move(b));
    N = std::make_shared<const AInfBimodule>(A, GradedBasis({{"x", x_deg}, {"y", y_deg}}), std::move(nops));
    MultiMap f(ring, Arity::marked(k - b0, b1 - 1 - k), Codomain::Module, i - 1);
    f.add(inner_in, 0, one);
    fops.emplace(std::pair{k - b0, b1 - 1 - k}, std::move(f));
    y = 1;
  } else {
    const int x_deg = block + i - 2;
    const int y_deg = x_deg + rest + outer_n - 1;
    MarkedFamily mops;
    std::map<int, MultiMap> aops;
    std::vector<Generator> mgens{{"m", degrees[k]}};
    if (block_has_mark) {
      mgens.push_back({"x", x_deg});
      MultiMap b(ring, Arity::marked(k - b0, b1 - 1 - k), Codomain::Module, i - 2);
      b.add(inner_in, 1, one);
      mops.emplace(std::pair{k - b0, b1 - 1 - k}, std::move(b));
      set_outer_x(1);
    } else {
      agens.push_back({"x", x_deg});
      const Letter x = static_cast<Letter>(agens.size() - 1);
      MultiMap m(ring, Arity::plain(i), Codomain::Algebra, i - 2);
      m.add(inner_in, x, one);
      aops.emplace(i, std::move(m));
      set_outer_x(x);
    }
    A = std::make_shared<const AInfAlgebra>(ring, GradedBasis(agens), std::move(aops));
    M = std::make_shared<const AInfBimodule>(A, GradedBasis(mgens), std::move(mops));
    N = std::make_shared<const AInfBimodule>(A, GradedBasis({{"y", y_deg}}), MarkedFamily{});
    MultiMap f(ring, Arity::marked(outer_k, outer_n - 1 - outer_k), Codomain::Module, outer_n - 1);
    f.add(outer_in, 0, one);
    fops.emplace(std::pair{outer_k, outer_n - 1 - outer_k}, std::move(f));
  }
  BimoduleMorphism F(M, N, std::move(fops));

  std::vector<Letter> letters;
  for (int r = 0; r < n; ++r) letters.push_back(r == k ? 0 : letter(r));
  const Word w{letters, k, true};
  const Grading gm = M->grading(true), gn = N->grading(true);
  const Vector v = side == MorphismSide::Right
                       ? project_to_generators(N->differential().apply(gn, F.lift().apply(gm, w)))
                       : project_to_generators(F.lift().apply(gm, M->differential().apply(gm, w)));
  const Scalar c = v.coefficient(Word{{y}, 0, true});
  if (c.value() == 1) return Sign{};
  if (c.value() == -1) return Sign::minus();
  throw Error("derived morphism coefficient is not a sign: " + c.to_string());
}

bool morphism_sign_agrees(MorphismSide side, int i, int j, int k, std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  const Sign expected = side == MorphismSide::Right ? epsilon_prime(i, j, degrees)
                                                    : morphism_epsilon(i, j, k, n - k - 1, degrees);
  return derived_morphism_sign(side, i, j, k, degrees) == expected * suspension_sign(degrees);
}

HochschildCochain pushforward(const BimoduleMorphism& f, const HochschildCochain& c,
                              std::shared_ptr<const AInfBimodule> target, std::optional<int> bound) {
  if (!(c.coefficients() == f.source())) throw Error("cochain coefficients differ from the morphism source");
  if (!target) target = f.target_ptr();
  const int n_max = bound.value_or(std::max(c.max_arity(), c.max_arity() + f.max_arity() - 1));
  const Grading gm = f.source().grading(true);
  const BicomoduleMap& F = f.lift();
  const Coderivation& C = c.suspended();
  auto fn = [&](const Word& w) { return F.apply(gm, C.apply(gm, w)); };
  return cochain_from_map(std::move(target), fn, c.degree(), n_max);
}

BimoduleMorphism from_dg_map(std::shared_ptr<const AInfBimodule> source, std::shared_ptr<const AInfBimodule> target,
                             const MultiMap& f) {
  if (f.arity() != Arity::marked(0, 0)) throw InputError("a DG map has shape (0,0)");
  MarkedFamily ops;
  ops.emplace(std::pair{0, 0}, f);
  return BimoduleMorphism(std::move(source), std::move(target), std::move(ops));
}

BimoduleMorphism identity(std::shared_ptr<const AInfBimodule> m) {
  MultiMap id(m->algebra().ring(), Arity::marked(0, 0), Codomain::Module, 0);
  for (std::size_t i = 0; i < m->basis().size(); ++i)
    id.add({static_cast<Letter>(i)}, static_cast<Letter>(i), Scalar::one(m->algebra().ring()));
  return from_dg_map(m, m, id);
}

BimoduleMorphism compose(const BimoduleMorphism& g, const BimoduleMorphism& f) {
  if (!(f.target() == g.source())) throw Error("composing morphisms that do not meet");
  const Grading gm = f.source().grading(true), gn = f.target().grading(true);
  const int bound = std::max(0, f.max_arity() + g.max_arity() - 2);
  LinearMap composite{f.source().algebra().ring(), 0,
                      [&](const Word& w) { return g.lift().apply(gn, f.lift().apply(gm, w)); }};
  MarkedFamily suspended = extract_marked_components(composite, gm, bound);
  const Grading plain = f.source().grading(false);
  MarkedFamily ops;
  for (auto& [kl, m] : suspended) ops.emplace(kl, desuspend(m, plain));
  return BimoduleMorphism(f.source_ptr(), g.target_ptr(), std::move(ops));
}

}  // namespace ainf
