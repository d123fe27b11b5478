#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/bimod.hpp"
#include "ainf/diagrams.hpp"
#include "ainf/hoch.hpp"
#include "ainf/iprod.hpp"
#include "ainf/morph.hpp"

namespace fx {

using namespace ainf;
using AlgPtr = std::shared_ptr<const AInfAlgebra>;
using BimodPtr = std::shared_ptr<const AInfBimodule>;

std::string fixture_path(const std::string& name);

// Structure-constant helpers keyed by generator names.
MultiMap plain_map(const Ring& r, const GradedBasis& b, int arity, int degree,
                   const std::vector<std::pair<std::vector<std::string>, std::vector<std::pair<long, std::string>>>>& table,
                   Codomain cod = Codomain::Algebra, const GradedBasis* out = nullptr);

// {1, x}, x^2 = 0, |x| = xdeg.
AlgPtr exterior(Ring r = Ring::integers(), int xdeg = 1);
// R[x]/x^n with |x| = 0.
AlgPtr truncated_poly(Ring r, int n);
// Only m_3(x,x,x) = z, |x| = d, |z| = 3d+1.
AlgPtr m3_only(int d = 0);
// mu(x,x) = y, mu(x,y) = x, everything else zero: fails associativity at k = 3.
AlgPtr non_associative();

// Classical (unsuspended) DGA axioms, coded directly.
struct ClassicalDga {
  Ring ring;
  GradedBasis basis;
  MultiMap d;
  MultiMap mu;
};
bool satisfies_dga_axioms(const ClassicalDga& a);
// Brute-force search over a 3-dimensional graded basis {1 (0), x (1), y (0)} with
// coefficients in {-1,0,1}; returns the first unital DGA with nonzero differential.
ClassicalDga search_dga3();
AlgPtr dga3();

BimodPtr trivial_bimodule(const AlgPtr& exterior_alg);
// sigma A: (sa) has degree |a|+1, d'(sa) = -s(da), a.(sb) = (-1)^{|a|} s(ab), (sb).a = s(ba).
BimodPtr shifted_bimodule(const AlgPtr& dga);
BimodPtr self(const AlgPtr& a);

// Augmentation A -> R over the exterior algebra.
BimoduleMorphism augmentation(const AlgPtr& exterior_alg);
// a -> a.y on dga3 (y is central).
BimoduleMorphism right_mult_y(const AlgPtr& dga);

// <1,x> = <x,1> = 1 on R[x]/x^2.
InnerProduct invariant_pairing(const AlgPtr& poly2);
// Only <x,1> = 1.
InnerProduct noninvariant_pairing(const AlgPtr& poly2);

// Random homogeneous multilinear map; `marked_alpha` is used at input position k when set.
MultiMap random_map(std::mt19937& rng, const Ring& r, Arity arity, Codomain cod, int degree,
                    const std::vector<int>& in_degrees, const std::vector<int>* marked_degrees,
                    const std::vector<int>& out_degrees, double density = 0.5);
HochschildCochain random_cochain(std::mt19937& rng, const BimodPtr& m, int degree, int max_arity);

// Direct unsuspended value of sum_{i,j} (-1)^eps m_{k-i+1}(.., m_i(..), ..) on a tuple.
std::map<Letter, Scalar> classical_relation(const AInfAlgebra& alg, const std::vector<Letter>& in);

// Dense Z/2 rank, written independently of the sparse reducer.
int dense_rank_mod2(std::vector<std::vector<int>> rows);

}  // namespace fx
