#pragma once

#include <memory>

#include "ainf/algebra.hpp"

namespace ainf {

enum class BimoduleKind { General, Self, DualSelf };

class AInfBimodule {
 public:
  // ops[(k,l)] is the unsuspended b_{k,l} (marked arity (k,l), degree k+l-1).
  AInfBimodule(std::shared_ptr<const AInfAlgebra> algebra, GradedBasis basis, MarkedFamily ops,
               BimoduleKind kind = BimoduleKind::General);

  const AInfAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const AInfAlgebra>& algebra_ptr() const { return algebra_; }
  const GradedBasis& basis() const { return basis_; }
  const MarkedFamily& ops() const { return ops_; }
  const MultiMap* op(int k, int l) const;
  BimoduleKind kind() const { return kind_; }
  // Largest k+l+1 among nonzero operations.
  int max_arity() const;

  Grading grading(bool suspended = true) const { return Grading(algebra_->basis(), &basis_, suspended); }
  const ModuleDifferential& differential() const { return differential_; }

  friend bool operator==(const AInfBimodule& a, const AInfBimodule& b) {
    return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.basis_ == b.basis_ &&
           families_equal(a.ops_, b.ops_);
  }

 private:
  std::shared_ptr<const AInfAlgebra> algebra_;
  GradedBasis basis_;
  MarkedFamily ops_;
  BimoduleKind kind_;
  ModuleDifferential differential_;
};

// pr o (D^M)^2 on marked words with k+l <= bound algebra letters.
CheckReport check_bimodule(const AInfBimodule& bm, const CheckOptions& opts);

// b_{0,0} = d', b_{1,0} = left action, b_{0,1} = right action.
AInfBimodule from_dg_bimodule(std::shared_ptr<const AInfAlgebra> alg, GradedBasis basis, const MultiMap& d,
                              const MultiMap& left, const MultiMap& right);

// Printed: the transpose sign as stated. Shifted: the same sign with |m*| replaced by
// |m*|+1 in its last term, which also handles a nonzero algebra differential.
enum class DualSign { Printed, Shifted };

// Dual bimodule on the dual basis with the transposed, sign-twisted operations.
AInfBimodule dual(const AInfBimodule& bm, DualSign sign = DualSign::Printed);

// The algebra over itself: b_{k,l} = m_{k+l+1}.
AInfBimodule self_bimodule(std::shared_ptr<const AInfAlgebra> alg);
AInfBimodule dual_self_bimodule(std::shared_ptr<const AInfAlgebra> alg);

}  // namespace ainf
