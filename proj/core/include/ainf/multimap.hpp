#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "ainf/graded.hpp"

namespace ainf {

// Input shape of a multilinear map: n algebra inputs, or k algebra inputs,
// one module input and l algebra inputs.
class Arity {
 public:
  Arity() = default;
  static Arity plain(int n);
  static Arity marked(int k, int l);

  bool is_marked() const { return marked_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int inputs() const { return marked_ ? k_ + l_ + 1 : k_; }

  friend bool operator==(const Arity&, const Arity&) = default;

 private:
  int k_ = 0;
  int l_ = 0;
  bool marked_ = false;
};

// Where outputs live: algebra generators, module generators, or the ground ring
// (a single output letter 0 of degree 0).
enum class Codomain { Algebra, Module, Scalar };

using Combination = std::map<Letter, Scalar>;

struct LexLess {
  using is_transparent = void;
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// A homogeneous multilinear map given by structure constants on basis tuples.
class MultiMap {
 public:
  using Entries = std::map<std::vector<Letter>, Combination, LexLess>;

  MultiMap() = default;
  MultiMap(Ring ring, Arity arity, Codomain codomain, int degree)
      : ring_(ring), arity_(arity), codomain_(codomain), degree_(degree) {}

  const Ring& ring() const { return ring_; }
  const Arity& arity() const { return arity_; }
  Codomain codomain() const { return codomain_; }
  int degree() const { return degree_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // Adds c*output to the value on inputs.
  void add(std::vector<Letter> inputs, Letter output, const Scalar& c);
  const Combination* find(std::span<const Letter> inputs) const;

  // Checks every stored output against input degree + declared degree.
  // `inputs` grades the input tuple (marked slot at position k), `outputs` the codomain.
  void validate(const Grading& inputs, std::span<const int> outputs) const;

  MultiMap scaled(const Scalar& c) const;
  MultiMap operator+(const MultiMap& o) const;
  MultiMap operator-(const MultiMap& o) const;

  friend bool operator==(const MultiMap& a, const MultiMap& b) {
    return a.ring_ == b.ring_ && a.arity_ == b.arity_ && a.codomain_ == b.codomain_ && a.degree_ == b.degree_ &&
           a.entries_ == b.entries_;
  }

 private:
  Ring ring_;
  Arity arity_;
  Codomain codomain_ = Codomain::Algebra;
  int degree_ = 0;
  Entries entries_;
};

// The input tuple of a map as a Word, for grading purposes.
Word input_word(const Arity& a, std::span<const Letter> inputs, bool suspended);

// F = s o f o (s^{-1})^{(x)n}. `unsuspended` grades the inputs of f.
// The result has degree |f| + 1 - n.
MultiMap suspend(const MultiMap& f, const Grading& unsuspended);
// Inverse of suspend; `unsuspended` still grades the unsuspended inputs.
MultiMap desuspend(const MultiMap& F, const Grading& unsuspended);

// Replaces letters [start, start+len) of w by map(letters), multiplied by
// coeff*(-1)^{|map| * deg(w[0..start))}, and accumulates into out.
// Output letters are marked when the block held the mark or the map lands in a module.
void insert_block(const Word& w, std::size_t start, const MultiMap& map, const Grading& g, const Scalar& coeff,
                  Vector& out);

// One factor of a tensor product of maps: identity on n letters, or a map.
struct TensorFactor {
  std::variant<int, const MultiMap*> f;
  static TensorFactor identity(int n) { return {n}; }
  static TensorFactor map(const MultiMap& m) { return {&m}; }
  int inputs() const;
};

// Koszul-signed (f_1 (x) ... (x) f_r)(w). Factors must consume w exactly.
Vector apply_tensor_of_maps(std::span<const TensorFactor> factors, const Word& w, const Grading& g, Ring ring);

}  // namespace ainf
