#include "fixtures.hpp"

#include <functional>

namespace fx {

namespace {

using Table = std::vector<std::pair<std::vector<std::string>, std::vector<std::pair<long, std::string>>>>;

// Inputs at position `marked_at` are looked up in `in_marked`.
MultiMap table_map(const Ring& r, Arity arity, Codomain cod, int degree, const GradedBasis& in_plain,
                   const GradedBasis* in_marked, int marked_at, const GradedBasis* out, const Table& table) {
  MultiMap m(r, arity, cod, degree);
  for (const auto& [ins, outs] : table) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < ins.size(); ++i)
      letters.push_back((in_marked && static_cast<int>(i) == marked_at) ? in_marked->index_of(ins[i])
                                                                        : in_plain.index_of(ins[i]));
    for (const auto& [c, name] : outs) m.add(letters, out ? out->index_of(name) : Letter{0}, Scalar(r, c));
  }
  return m;
}

using Comb = std::map<Letter, Scalar>;

Comb apply1(const MultiMap& m, std::vector<Letter> in) {
  const Combination* c = m.find(in);
  return c ? Comb(c->begin(), c->end()) : Comb{};
}

void add_to(Comb& acc, const Comb& v, const Scalar& c) {
  for (const auto& [b, x] : v) {
    auto [it, fresh] = acc.emplace(b, x * c);
    if (!fresh) it->second += x * c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// mu(u, v) extended bilinearly.
Comb mul(const MultiMap& mu, const Comb& u, const Comb& v) {
  Comb out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) add_to(out, apply1(mu, {a, b}), ca * cb);
  return out;
}

Comb lin(const MultiMap& f, const Comb& u) {
  Comb out;
  for (const auto& [a, ca] : u) add_to(out, apply1(f, {a}), ca);
  return out;
}

Comb basis_vec(const Ring& r, Letter a) { return Comb{{a, Scalar::one(r)}}; }

}  // namespace

std::string fixture_path(const std::string& name) { return std::string(AINF_FIXTURE_DIR) + "/" + name; }

MultiMap plain_map(const Ring& r, const GradedBasis& b, int arity, int degree, const Table& table, Codomain cod,
                   const GradedBasis* out) {
  return table_map(r, Arity::plain(arity), cod, degree, b, nullptr, -1,
                   cod == Codomain::Scalar ? nullptr : (out ? out : &b), table);
}

AlgPtr exterior(Ring r, int xdeg) {
  GradedBasis b({{"1", 0}, {"x", xdeg}}, "1");
  auto mu = plain_map(r, b, 2, 0, {{{"1", "1"}, {{1, "1"}}}, {{"1", "x"}, {{1, "x"}}}, {{"x", "1"}, {{1, "x"}}}});
  return std::make_shared<const AInfAlgebra>(r, b, std::map<int, MultiMap>{{2, mu}});
}

AlgPtr truncated_poly(Ring r, int n) {
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)), 0});
  GradedBasis b(gens, "1");
  MultiMap mu(r, Arity::plain(2), Codomain::Algebra, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j)
      mu.add({static_cast<Letter>(i), static_cast<Letter>(j)}, static_cast<Letter>(i + j), Scalar::one(r));
  return std::make_shared<const AInfAlgebra>(r, b, std::map<int, MultiMap>{{2, mu}});
}

AlgPtr m3_only(int d) {
  const Ring r = Ring::integers();
  GradedBasis b({{"x", d}, {"z", 3 * d + 1}});
  auto m3 = plain_map(r, b, 3, 1, {{{"x", "x", "x"}, {{1, "z"}}}});
  return std::make_shared<const AInfAlgebra>(r, b, std::map<int, MultiMap>{{3, m3}});
}

AlgPtr non_associative() {
  const Ring r = Ring::integers();
  GradedBasis b({{"x", 0}, {"y", 0}});
  auto mu = plain_map(r, b, 2, 0, {{{"x", "x"}, {{1, "y"}}}, {{"x", "y"}, {{1, "x"}}}});
  return std::make_shared<const AInfAlgebra>(r, b, std::map<int, MultiMap>{{2, mu}});
}

bool satisfies_dga_axioms(const ClassicalDga& a) {
  const Ring& r = a.ring;
  const std::size_t n = a.basis.size();
  auto deg = [&](Letter x) { return a.basis.degree(x); };
  for (const auto& [in, out] : a.d.entries())
    for (const auto& [b, c] : out)
      if (deg(b) != deg(in[0]) - 1) return false;
  for (const auto& [in, out] : a.mu.entries())
    for (const auto& [b, c] : out)
      if (deg(b) != deg(in[0]) + deg(in[1])) return false;
  for (Letter x = 0; x < n; ++x)
    if (!lin(a.d, lin(a.d, basis_vec(r, x))).empty()) return false;
  if (auto u = a.basis.unit())
    for (Letter x = 0; x < n; ++x)
      if (mul(a.mu, basis_vec(r, *u), basis_vec(r, x)) != basis_vec(r, x) ||
          mul(a.mu, basis_vec(r, x), basis_vec(r, *u)) != basis_vec(r, x))
        return false;
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      const Comb ex = basis_vec(r, x), ey = basis_vec(r, y);
      // d(xy) = d(x)y + (-1)^{|x|} x d(y)
      Comb lhs = lin(a.d, mul(a.mu, ex, ey));
      Comb rhs = mul(a.mu, lin(a.d, ex), ey);
      add_to(rhs, mul(a.mu, ex, lin(a.d, ey)), Scalar::of(r, Sign::from_parity(deg(x))));
      if (lhs != rhs) return false;
      for (Letter z = 0; z < n; ++z) {
        const Comb ez = basis_vec(r, z);
        if (mul(a.mu, mul(a.mu, ex, ey), ez) != mul(a.mu, ex, mul(a.mu, ey, ez))) return false;
      }
    }
  return true;
}

ClassicalDga search_dga3() {
  const Ring r = Ring::integers();
  GradedBasis b({{"1", 0}, {"x", 1}, {"y", 0}}, "1");
  const long vals[] = {1, -1, 0};
  // dx = p*1 + q*y, xy = c*x, yx = e*x, yy = f*1 + g*y.
  for (long p : vals)
    for (long q : vals)
      for (long c : vals)
        for (long e : vals)
          for (long f : vals)
            for (long g : vals) {
              if (p == 0 && q == 0) continue;
              Table d_table{{{"x"}, {{p, "1"}, {q, "y"}}}};
              Table mu_table{{{"1", "1"}, {{1, "1"}}}, {{"1", "x"}, {{1, "x"}}}, {{"x", "1"}, {{1, "x"}}},
                             {{"1", "y"}, {{1, "y"}}}, {{"y", "1"}, {{1, "y"}}}, {{"x", "y"}, {{c, "x"}}},
                             {{"y", "x"}, {{e, "x"}}},  {{"y", "y"}, {{f, "1"}, {g, "y"}}}};
              ClassicalDga a{r, b, plain_map(r, b, 1, -1, d_table), plain_map(r, b, 2, 0, mu_table)};
              if (satisfies_dga_axioms(a)) return a;
            }
  throw Error("no 3-dimensional DGA with nonzero differential found");
}

AlgPtr dga3() {
  static const AlgPtr alg = [] {
    auto a = search_dga3();
    return std::make_shared<const AInfAlgebra>(from_dga(a.ring, a.basis, a.d, a.mu));
  }();
  return alg;
}

BimodPtr trivial_bimodule(const AlgPtr& alg) {
  const Ring r = alg->ring();
  GradedBasis m({{"m", 0}});
  MultiMap d(r, Arity::marked(0, 0), Codomain::Module, -1);
  auto left = table_map(r, Arity::marked(1, 0), Codomain::Module, 0, alg->basis(), &m, 1, &m, {{{"1", "m"}, {{1, "m"}}}});
  auto right = table_map(r, Arity::marked(0, 1), Codomain::Module, 0, alg->basis(), &m, 0, &m, {{{"m", "1"}, {{1, "m"}}}});
  return std::make_shared<const AInfBimodule>(from_dg_bimodule(alg, m, d, left, right));
}

BimodPtr shifted_bimodule(const AlgPtr& alg) {
  const Ring r = alg->ring();
  const GradedBasis& a = alg->basis();
  std::vector<Generator> gens;
  for (const auto& g : a.generators()) gens.push_back({"s" + g.name, g.degree + 1});
  GradedBasis m(gens);
  const MultiMap* d = alg->op(1);
  const MultiMap* mu = alg->op(2);
  MultiMap dm(r, Arity::marked(0, 0), Codomain::Module, -1);
  MultiMap left(r, Arity::marked(1, 0), Codomain::Module, 0);
  MultiMap right(r, Arity::marked(0, 1), Codomain::Module, 0);
  for (Letter x = 0; x < a.size(); ++x) {
    if (d)
      for (const auto& [b, c] : apply1(*d, {x})) dm.add({x}, b, -c);
    for (Letter y = 0; y < a.size(); ++y) {
      if (!mu) continue;
      for (const auto& [b, c] : apply1(*mu, {x, y})) {
        left.add({x, y}, b, c * Sign::from_parity(a.degree(x)));
        right.add({x, y}, b, c);  // (s x).y = s(xy)
      }
    }
  }
  return std::make_shared<const AInfBimodule>(from_dg_bimodule(alg, m, dm, left, right));
}

BimodPtr self(const AlgPtr& a) { return std::make_shared<const AInfBimodule>(self_bimodule(a)); }

BimoduleMorphism augmentation(const AlgPtr& alg) {
  auto src = self(alg);
  auto tgt = trivial_bimodule(alg);
  auto f = table_map(alg->ring(), Arity::marked(0, 0), Codomain::Module, 0, alg->basis(), &src->basis(), 0,
                     &tgt->basis(), {{{"1"}, {{1, "m"}}}});
  return from_dg_map(src, tgt, f);
}

BimoduleMorphism right_mult_y(const AlgPtr& alg) {
  auto m = self(alg);
  const Ring r = alg->ring();
  const Letter y = alg->basis().index_of("y");
  MultiMap f(r, Arity::marked(0, 0), Codomain::Module, 0);
  for (Letter a = 0; a < alg->basis().size(); ++a)
    for (const auto& [b, c] : apply1(*alg->op(2), {a, y})) f.add({a}, b, c);
  return from_dg_map(m, m, f);
}

InnerProduct invariant_pairing(const AlgPtr& alg) {
  auto p = plain_map(alg->ring(), alg->basis(), 2, 0, {{{"1", "x"}, {{1, ""}}}, {{"x", "1"}, {{1, ""}}}},
                     Codomain::Scalar);
  return InnerProduct(alg, MarkedFamily{{{0, 0}, p}});
}

InnerProduct noninvariant_pairing(const AlgPtr& alg) {
  auto p = plain_map(alg->ring(), alg->basis(), 2, 0, {{{"x", "1"}, {{1, ""}}}}, Codomain::Scalar);
  return InnerProduct(alg, MarkedFamily{{{0, 0}, p}});
}

MultiMap random_map(std::mt19937& rng, const Ring& r, Arity arity, Codomain cod, int degree,
                    const std::vector<int>& in_degrees, const std::vector<int>* marked_degrees,
                    const std::vector<int>& out_degrees, double density) {
  MultiMap m(r, arity, cod, degree);
  const int n = arity.inputs();
  const int marked_at = arity.is_marked() ? arity.k() : -1;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<Letter> tuple(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int deg) {
    if (pos == n) {
      for (std::size_t b = 0; b < out_degrees.size(); ++b) {
        if (out_degrees[b] != deg + degree || coin(rng) >= density) continue;
        int c = 0;
        while (c == 0) c = r.is_char2() ? 1 : coeff(rng);
        m.add(tuple, static_cast<Letter>(b), Scalar(r, c));
      }
      return;
    }
    const auto& alpha = (pos == marked_at && marked_degrees) ? *marked_degrees : in_degrees;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      tuple[static_cast<std::size_t>(pos)] = static_cast<Letter>(a);
      rec(pos + 1, deg + alpha[a]);
    }
  };
  rec(0, 0);
  return m;
}

HochschildCochain random_cochain(std::mt19937& rng, const BimodPtr& m, int degree, int max_arity) {
  const Ring r = m->algebra().ring();
  const auto in = m->algebra().basis().degrees();
  const auto out = m->basis().degrees();
  std::map<int, MultiMap> comps;
  for (int j = 0; j <= max_arity; ++j)
    comps.emplace(j, random_map(rng, r, Arity::plain(j), Codomain::Module, degree - 1 + j, in, nullptr, out, 0.4));
  return HochschildCochain::from_components(m, comps, degree);
}

std::map<Letter, Scalar> classical_relation(const AInfAlgebra& alg, const std::vector<Letter>& in) {
  const int k = static_cast<int>(in.size());
  const auto& b = alg.basis();
  std::vector<int> degs;
  for (Letter a : in) degs.push_back(b.degree(a));
  Comb acc;
  for (int i = 1; i <= k; ++i) {
    const MultiMap* inner = alg.op(i);
    const MultiMap* outer = alg.op(k - i + 1);
    if (!inner || !outer) continue;
    for (int j = 1; j <= k - i + 1; ++j) {
      const Scalar sign = Scalar::of(alg.ring(), epsilon(i, j, k, degs));
      std::vector<Letter> block(in.begin() + (j - 1), in.begin() + (j - 1 + i));
      for (const auto& [x, c] : apply1(*inner, block)) {
        std::vector<Letter> t(in.begin(), in.begin() + (j - 1));
        t.push_back(x);
        t.insert(t.end(), in.begin() + (j - 1 + i), in.end());
        add_to(acc, apply1(*outer, t), c * sign);
      }
    }
  }
  return acc;
}

int dense_rank_mod2(std::vector<std::vector<int>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && rows[i][c])
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[static_cast<std::size_t>(rank)][j];
    ++rank;
  }
  return rank;
}

}  // namespace fx
