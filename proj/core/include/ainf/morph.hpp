#pragma once

#include <memory>
#include <optional>

#include "ainf/bimod.hpp"
#include "ainf/hoch.hpp"

namespace ainf {

// An A-infinity bimodule map M -> N with components f_{k,l} of degree k+l.
class BimoduleMorphism {
 public:
  BimoduleMorphism(std::shared_ptr<const AInfBimodule> source, std::shared_ptr<const AInfBimodule> target,
                   MarkedFamily ops);

  const AInfBimodule& source() const { return *source_; }
  const AInfBimodule& target() const { return *target_; }
  const std::shared_ptr<const AInfBimodule>& source_ptr() const { return source_; }
  const std::shared_ptr<const AInfBimodule>& target_ptr() const { return target_; }
  const MarkedFamily& ops() const { return ops_; }
  const MultiMap* op(int k, int l) const;
  int max_arity() const;
  // Suspended lift T^M V -> T^N V (degree 0).
  const BicomoduleMap& lift() const { return lift_; }

 private:
  std::shared_ptr<const AInfBimodule> source_;
  std::shared_ptr<const AInfBimodule> target_;
  MarkedFamily ops_;
  BicomoduleMap lift_;
};

// pr o (F o D^M - D^N o F) on marked words with k+l <= bound.
CheckReport check_morphism(const BimoduleMorphism& f, const CheckOptions& opts);

// Sign exponents of the two sides of the morphism relation at (k,l).
// Left: f(.., op_i(block at j), ..); right: c(.., f(block at j), ..).
Sign morphism_epsilon(int i, int j, int k, int l, std::span<const int> degrees);
Sign epsilon_prime(int i, int j, std::span<const int> degrees);

enum class MorphismSide { Left, Right };
// Engine-derived sign of the single (i,j) term on a free setup with inputs of the
// given unsuspended degrees; the module input sits at position k (0-based).
Sign derived_morphism_sign(MorphismSide side, int i, int j, int k, std::span<const int> degrees);
bool morphism_sign_agrees(MorphismSide side, int i, int j, int k, std::span<const int> degrees);

// F#(f) = pr_{sN} o F o f.
HochschildCochain pushforward(const BimoduleMorphism& f, const HochschildCochain& c,
                              std::shared_ptr<const AInfBimodule> target = nullptr,
                              std::optional<int> bound = std::nullopt);

// f_{0,0} = the given DG map, higher components zero.
BimoduleMorphism from_dg_map(std::shared_ptr<const AInfBimodule> source, std::shared_ptr<const AInfBimodule> target,
                             const MultiMap& f);
BimoduleMorphism identity(std::shared_ptr<const AInfBimodule> m);
// g o f, components read off from the composite lift.
BimoduleMorphism compose(const BimoduleMorphism& g, const BimoduleMorphism& f);

}  // namespace ainf
