#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ainf/morph.hpp"

namespace ainf {

// A family of pairings <..>_{k,l} : A^{k+l+2} -> R of degree k+l.
class InnerProduct {
 public:
  // pairings[(k,l)]: plain arity k+l+2, scalar codomain, degree k+l.
  InnerProduct(std::shared_ptr<const AInfAlgebra> algebra, MarkedFamily pairings);

  const AInfAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const AInfAlgebra>& algebra_ptr() const { return algebra_; }
  const MarkedFamily& pairings() const { return pairings_; }
  const MultiMap* pairing(int k, int l) const;
  int max_arity() const;

  friend bool operator==(const InnerProduct& a, const InnerProduct& b) {
    return *a.algebra_ == *b.algebra_ && families_equal(a.pairings_, b.pairings_);
  }

 private:
  std::shared_ptr<const AInfAlgebra> algebra_;
  MarkedFamily pairings_;
};

// <a_1..a_{k+l+1}, a'>_{k,l} = (-1)^{|a'|} (f_{k,l}(a_1..a_{k+l+1}))(a').
InnerProduct from_morphism(const BimoduleMorphism& f);
BimoduleMorphism to_morphism(const InnerProduct& ip);

// Delegates to check_morphism(to_morphism(ip)); defect text uses pairing notation.
CheckReport check_inner_product(const InnerProduct& ip, const CheckOptions& opts);

// One term <.., m_j(..), ..>_{r,s} of the relation at (k,l).
struct RelationTerm {
  int r = 0;
  int s = 0;
  // Input indices (0-based, out of k+l+2) held by each slot, in order.
  std::vector<std::vector<int>> slots;
  // The slot holding the new multiplication.
  int merged_slot = 0;
  std::optional<Sign> sign;

  std::string to_string(const std::vector<std::string>& labels) const;
};

// The terms with one multiplication of arity >= 2 in the relation at (k,l).
// With `degrees` (the first k+l+1 input degrees; the last is forced by degree
// reasons) each term carries its engine-derived sign.
std::vector<RelationTerm> relation_terms(int k, int l, const std::optional<std::vector<int>>& degrees = std::nullopt);

// Independent re-check of the cyclic-order conditions for a term of the relation at (k,l).
bool satisfies_relation_conditions(const RelationTerm& t, int k, int l);

}  // namespace ainf
