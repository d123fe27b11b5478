#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ainf/bimod.hpp"

namespace ainf {

// A Hochschild cochain f in C*(A, M), stored at the suspended level as a
// coderivation TV -> T^W V with components F_j : (sA)^j -> sM.
class HochschildCochain {
 public:
  HochschildCochain(std::shared_ptr<const AInfBimodule> coefficients, Coderivation suspended);
  // Unsuspended components f_j : A^j -> M. `degree` is the coderivation degree
  // and is inferred from the components when they are nonzero.
  static HochschildCochain from_components(std::shared_ptr<const AInfBimodule> coefficients,
                                           const std::map<int, MultiMap>& components,
                                           std::optional<int> degree = std::nullopt);
  static HochschildCochain zero(std::shared_ptr<const AInfBimodule> coefficients, int degree);

  const AInfBimodule& coefficients() const { return *coefficients_; }
  const std::shared_ptr<const AInfBimodule>& coefficients_ptr() const { return coefficients_; }
  const Coderivation& suspended() const { return suspended_; }
  int degree() const { return suspended_.degree; }
  int max_arity() const { return suspended_.max_arity(); }
  // Unsuspended f_j (zero map when absent).
  MultiMap component(int j) const;
  std::map<int, MultiMap> components() const;
  bool is_zero() const;

  HochschildCochain operator+(const HochschildCochain& o) const;
  HochschildCochain operator-(const HochschildCochain& o) const;
  HochschildCochain scaled(const Scalar& c) const;

  friend bool operator==(const HochschildCochain& a, const HochschildCochain& b) {
    return a.suspended_ == b.suspended_;
  }

 private:
  std::shared_ptr<const AInfBimodule> coefficients_;
  Coderivation suspended_;
};

// Cochain whose components are pr_{sM} o fn on words of length 0..bound.
HochschildCochain cochain_from_map(std::shared_ptr<const AInfBimodule> coefficients,
                                   const std::function<Vector(const Word&)>& fn, int degree, int bound);

// delta(f) = D^M o f - (-1)^{|f|} f o D, components up to `bound`
// (default: large enough that nothing is truncated).
HochschildCochain delta(const HochschildCochain& f, std::optional<int> bound = std::nullopt);

enum class SignMode { Mod2, ExperimentalSigned };

// Cup product, composition and bracket on C*(A, A). Mod2 requires the ring Z/2.
HochschildCochain cup(const HochschildCochain& f, const HochschildCochain& g, SignMode mode,
                      std::optional<int> bound = std::nullopt);
HochschildCochain circle(const HochschildCochain& f, const HochschildCochain& g, SignMode mode,
                         std::optional<int> bound = std::nullopt);
HochschildCochain bracket(const HochschildCochain& f, const HochschildCochain& g, SignMode mode,
                          std::optional<int> bound = std::nullopt);

// Connes' operator on C*(A, A*); requires a unit. Lowers arity by one.
HochschildCochain connes_b(const HochschildCochain& f, SignMode mode);
// Reported only: whether B(B(f)) vanishes.
bool connes_b_squares_to_zero(const HochschildCochain& f, SignMode mode);

}  // namespace ainf
