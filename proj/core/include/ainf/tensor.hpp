#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ainf/graded.hpp"
#include "ainf/multimap.hpp"

namespace ainf {

using TensorPair = std::pair<Word, Word>;

// Elements of a tensor product of two tensor coalgebras.
class PairVector {
 public:
  explicit PairVector(Ring ring) : ring_(ring) {}
  void add(const TensorPair& p, const Scalar& c);
  const std::map<TensorPair, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PairVector& operator-=(const PairVector& o);
  friend bool operator==(const PairVector& a, const PairVector& b) { return a.terms_ == b.terms_; }

 private:
  Ring ring_;
  std::map<TensorPair, Scalar> terms_;
};

// Deconcatenation of an unmarked word, including the empty splits.
std::vector<TensorPair> comultiply(const Word& w);
// Splits of a marked word; exactly one side keeps the mark.
std::vector<TensorPair> comultiply_marked(const Word& w);

// All basis words of the given length; `marked_alphabet` > 0 produces words marked at `mark`.
std::vector<Word> basis_words(std::size_t alphabet, int length, bool suspended = true);
std::vector<Word> marked_basis_words(std::size_t alphabet, std::size_t marked_alphabet, int k, int l,
                                     bool suspended = true);

using MarkedFamily = std::map<std::pair<int, int>, MultiMap>;

// A coderivation of the bar construction given by its components.
// Target Algebra: TV -> TV. Target Module: TV -> T^W V (a coderivation into a bicomodule).
struct Coderivation {
  Ring ring;
  int degree = 0;
  Codomain target = Codomain::Algebra;
  std::map<int, MultiMap> components;

  Vector apply(const Grading& g, const Word& w) const;
  Vector apply(const Grading& g, const Vector& v) const;
  int max_arity() const { return components.empty() ? 0 : components.rbegin()->first; }
  friend bool operator==(const Coderivation& a, const Coderivation& b);
};

Coderivation lift_coderivation(const MultiMap& component);
Coderivation lift_to_bicomodule(const MultiMap& component);

// The differential on T^W V induced by a coderivation psi of TV and module components rho_{i,j}.
struct ModuleDifferential {
  Coderivation algebra;
  MarkedFamily module;
  int degree = 0;

  Vector apply(const Grading& g, const Word& w) const;
  Vector apply(const Grading& g, const Vector& v) const;
};

ModuleDifferential lift_module_differential(const Coderivation& psi, const MarkedFamily& rho);

// A bicomodule map T^W V -> T^Z V given by components f_{k,l}.
struct BicomoduleMap {
  Ring ring;
  MarkedFamily components;
  int degree = 0;

  Vector apply(const Grading& g, const Word& w) const;
  Vector apply(const Grading& g, const Vector& v) const;
};

BicomoduleMap lift_morphism(const MarkedFamily& f, Ring ring);

// An arbitrary homogeneous linear map on words.
struct LinearMap {
  Ring ring;
  int degree = 0;
  std::function<Vector(const Word&)> fn;
};

enum class CoderivationKind { Algebra, Bicomodule, ModuleDifferential, Morphism };

struct SquareViolation {
  Word word;
  PairVector lhs;
  PairVector rhs;
};

struct CoderivationCheck {
  CoderivationKind kind = CoderivationKind::Algebra;
  // Gradings of the source and target words; for Algebra both are the same.
  const Grading* source = nullptr;
  const Grading* target = nullptr;
  // Required for ModuleDifferential: the algebra coderivation on the unmarked side.
  const LinearMap* psi = nullptr;
  int bound = 4;
};

// Checks the coderivation/comodule square on every basis word up to the bound.
std::optional<SquareViolation> check_coderivation(const LinearMap& f, const CoderivationCheck& opts);

// Components of a map TV -> TV or TV -> T^W V, read off by projecting to words of length one.
Coderivation extract_components(const LinearMap& sigma, const Grading& source, Codomain target, int max_arity);
// Components (k,l) with k+l <= bound of a map defined on marked words.
MarkedFamily extract_marked_components(const LinearMap& sigma, const Grading& source, int bound);

LinearMap as_linear_map(const Coderivation& c, const Grading& g);
LinearMap as_linear_map(const ModuleDifferential& d, const Grading& g);
LinearMap as_linear_map(const BicomoduleMap& f, const Grading& g);

// Words of length one only.
Vector project_to_generators(const Vector& v);

bool families_equal(const MarkedFamily& a, const MarkedFamily& b);

}  // namespace ainf
