#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainf/graded.hpp"
#include "ainf/multimap.hpp"
#include "ainf/tensor.hpp"

namespace ainf {

// One nonzero relation instance found by a check.
struct Defect {
  int k = 0;
  int l = -1;  // -1 for algebra relations
  Word word;
  Vector value;
  std::string word_text;
  std::string value_text;

  std::string location() const;
};

struct CheckReport {
  bool passed = true;
  int bound = 0;
  std::vector<Defect> defects;
};

struct CheckOptions {
  int bound = 4;
  // When false, stop at the first defect.
  bool exhaustive = true;
  int workers = 0;
};

class AInfAlgebra {
 public:
  // ops[i] is the unsuspended m_i (plain arity i, degree i-2). Arity 0 is rejected.
  AInfAlgebra(Ring ring, GradedBasis basis, std::map<int, MultiMap> ops);

  const Ring& ring() const { return ring_; }
  const GradedBasis& basis() const { return basis_; }
  const std::map<int, MultiMap>& ops() const { return ops_; }
  const MultiMap* op(int i) const;
  int max_arity() const;

  Grading grading(bool suspended = true) const { return Grading(basis_, nullptr, suspended); }
  // D with components D_i = suspended m_i.
  const Coderivation& bar_differential() const { return bar_; }

  friend bool operator==(const AInfAlgebra& a, const AInfAlgebra& b) {
    return a.ring_ == b.ring_ && a.basis_ == b.basis_ && a.ops_ == b.ops_;
  }

 private:
  Ring ring_;
  GradedBasis basis_;
  std::map<int, MultiMap> ops_;
  Coderivation bar_;
};

MultiMap suspended_component(const AInfAlgebra& alg, int i);

// Exponent sign for the term m_{k-i+1}(a_1..a_{j-1}, m_i(a_j..a_{i+j-1}), ..) of the relation at k.
Sign epsilon(int i, int j, int k, std::span<const int> degrees);

// pr o D^2 on all words of length 1..bound.
CheckReport check_relations(const AInfAlgebra& alg, const CheckOptions& opts);

// The single (i,j) term pr D_{k-i+1}(.. D_i(block at j) ..) of pr D^2 on a suspended word.
Vector relation_term(const AInfAlgebra& alg, int i, int j, const Word& w);

// Sign of the (i,j) term of pr D^2 computed by the engine on a free algebra whose
// only operations produce that term, with inputs of the given unsuspended degrees.
Sign derived_relation_sign(int i, int j, std::span<const int> degrees);

// True when derived_relation_sign equals epsilon times the suspension sign.
bool relation_sign_agrees(int i, int j, std::span<const int> degrees);

// Exhaustive over all k <= k_bound, all (i,j), all tuples of basis degrees of alg.
bool sign_oracle_agreement(const AInfAlgebra& alg, int k_bound);

// m_1 = d, m_2 = mu, higher m_i = 0.
AInfAlgebra from_dga(Ring ring, GradedBasis basis, const MultiMap& d, const MultiMap& mu);

}  // namespace ainf
