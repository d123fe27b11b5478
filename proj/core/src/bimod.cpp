#include "ainf/bimod.hpp"

#include "ainf/parallel.hpp"

namespace ainf {

AInfBimodule::AInfBimodule(std::shared_ptr<const AInfAlgebra> algebra, GradedBasis basis, MarkedFamily ops,
                           BimoduleKind kind)
    : algebra_(std::move(algebra)), basis_(std::move(basis)), kind_(kind) {
  if (!algebra_) throw InputError("bimodule without an algebra");
  const Grading plain = grading(false);
  const std::vector<int> out = basis_.degrees();
  MarkedFamily suspended;
  for (auto& [kl, m] : ops) {
    const auto [k, l] = kl;
    const std::string name = "b_{" + std::to_string(k) + "," + std::to_string(l) + "}";
    if (m.arity() != Arity::marked(k, l)) throw ArityError(name + " has the wrong shape");
    if (m.codomain() != Codomain::Module) throw ArityError(name + " must land in the module");
    if (!(m.ring() == algebra_->ring())) throw InputError(name + " is over the wrong ring");
    if (m.degree() != k + l - 1) throw DegreeError(name + " must have degree " + std::to_string(k + l - 1));
    m.validate(plain, out);
    if (m.is_zero()) continue;
    suspended.emplace(kl, suspend(m, plain));
    ops_.emplace(kl, std::move(m));
  }
  differential_ = lift_module_differential(algebra_->bar_differential(), suspended);
}

const MultiMap* AInfBimodule::op(int k, int l) const {
  auto it = ops_.find({k, l});
  return it == ops_.end() ? nullptr : &it->second;
}

int AInfBimodule::max_arity() const {
  int n = 0;
  for (const auto& [kl, m] : ops_) n = std::max(n, kl.first + kl.second + 1);
  return n;
}

CheckReport check_bimodule(const AInfBimodule& bm, const CheckOptions& opts) {
  CheckReport report;
  report.bound = opts.bound;
  const Grading g = bm.grading(true);
  const ModuleDifferential& D = bm.differential();
  const GradedBasis& A = bm.algebra().basis();

  std::vector<Word> words;
  for (int n = 0; n <= opts.bound; ++n)
    for (int k = 0; k <= n; ++k) {
      auto ws = marked_basis_words(A.size(), bm.basis().size(), k, n - k);
      words.insert(words.end(), ws.begin(), ws.end());
    }
  auto value_of = [&](const Word& w) { return project_to_generators(D.apply(g, D.apply(g, w))); };
  auto record = [&](const Word& w, Vector v) {
    const int k = w.mark;
    report.defects.push_back(Defect{k, static_cast<int>(w.size()) - k - 1, w, v, format_word(w, A, &bm.basis()),
                                    format_vector(v, A, &bm.basis())});
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

AInfBimodule from_dg_bimodule(std::shared_ptr<const AInfAlgebra> alg, GradedBasis basis, const MultiMap& d,
                              const MultiMap& left, const MultiMap& right) {
  if (d.arity() != Arity::marked(0, 0)) throw InputError("module differential must have shape (0,0)");
  if (left.arity() != Arity::marked(1, 0)) throw InputError("left action must have shape (1,0)");
  if (right.arity() != Arity::marked(0, 1)) throw InputError("right action must have shape (0,1)");
  MarkedFamily ops;
  ops.emplace(std::pair{0, 0}, d);
  ops.emplace(std::pair{1, 0}, left);
  ops.emplace(std::pair{0, 1}, right);
  return AInfBimodule(std::move(alg), std::move(basis), std::move(ops));
}

AInfBimodule dual(const AInfBimodule& bm, DualSign sign) {
  const GradedBasis& A = bm.algebra().basis();
  const GradedBasis& M = bm.basis();
  const GradedBasis Mdual = M.dual();
  const Ring ring = bm.algebra().ring();
  MarkedFamily ops;
  // b'_{k,l}(a_1..a_k, p*, a_{k+1}..a_{k+l})(q) = (-1)^e * [coefficient of p in b_{l,k}(a_{k+1}.., q, a_1..a_k)]
  for (const auto& [lk, b] : bm.ops()) {
    const auto [l, k] = lk;
    MultiMap& out = ops.try_emplace(std::pair{k, l}, ring, Arity::marked(k, l), Codomain::Module, k + l - 1)
                        .first->second;
    for (const auto& [in, comb] : b.entries()) {
      // in = (c_1..c_l, q, d_1..d_k) with c = a_{k+1..k+l}, d = a_{1..k}.
      const Letter q = in[static_cast<std::size_t>(l)];
      std::vector<Letter> dual_in(in.begin() + l + 1, in.end());
      long long left_deg = 0, right_deg = 0;
      for (Letter a : dual_in) left_deg += A.degree(a);
      for (int r = 0; r < l; ++r) right_deg += A.degree(in[static_cast<std::size_t>(r)]);
      for (const auto& [p, c] : comb) {
        const long long pstar = Mdual.degree(p);
        const long long shift = sign == DualSign::Shifted ? 1 : 0;
        const long long e = left_deg * (pstar + right_deg + M.degree(q)) + (pstar + shift) * (k + l + 1);
        std::vector<Letter> full = dual_in;
        full.push_back(p);
        full.insert(full.end(), in.begin(), in.begin() + l);
        out.add(std::move(full), q, c * Sign::from_parity(e < 0 ? -e : e));
      }
    }
  }
  const BimoduleKind kind = bm.kind() == BimoduleKind::Self       ? BimoduleKind::DualSelf
                            : bm.kind() == BimoduleKind::DualSelf ? BimoduleKind::Self
                                                                  : BimoduleKind::General;
  return AInfBimodule(bm.algebra_ptr(), Mdual, std::move(ops), kind);
}

AInfBimodule self_bimodule(std::shared_ptr<const AInfAlgebra> alg) {
  MarkedFamily ops;
  for (const auto& [n, m] : alg->ops()) {
    for (int k = 0; k < n; ++k) {
      MultiMap b(alg->ring(), Arity::marked(k, n - 1 - k), Codomain::Module, n - 2);
      for (const auto& [in, comb] : m.entries())
        for (const auto& [o, c] : comb) b.add(in, o, c);
      ops.emplace(std::pair{k, n - 1 - k}, std::move(b));
    }
  }
  GradedBasis basis = alg->basis();
  return AInfBimodule(std::move(alg), std::move(basis), std::move(ops), BimoduleKind::Self);
}

AInfBimodule dual_self_bimodule(std::shared_ptr<const AInfAlgebra> alg) { return dual(self_bimodule(std::move(alg))); }

}  // namespace ainf
