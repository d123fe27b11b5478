#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "criteria.hpp"

namespace {

struct Criterion {
  const char* name;
  std::function<fx::Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"boundary of small bare circles (2, 3 and 4 leaves)", [] { return fx::boundary_examples(); }},
      {"d^2 = 0 and degree drop for all diagrams with <= 7 leaves", [] { return fx::d_squared_small(7); }},
      {"relation and morphism signs match the engine-derived signs", [] { return fx::sign_oracles(); }},
      {"DGA fixtures pass at bound 6, m_{>=3} terms vanish", [] { return fx::dga_fixtures(); }},
      {"DG bimodules and their duals pass; self bimodule mirrors algebra defects", [] { return fx::bimodule_suite(); }},
      {"morphism fixtures, pushforward vs delta, identity and composition", [] { return fx::morphism_suite(); }},
      {"delta^2 = 0, bracket antisymmetry, cup vs classical oracle", [] { return fx::hochschild_suite(); }},
      {"invariant pairing passes; relation terms match diagram insertions", [] { return fx::inner_product_suite(); }},
      {"component <-> lift round-trips for four kinds of maps", [] { return fx::lift_roundtrips(); }},
      {"N = 2, 3 homology over Z/2 matches dense elimination", [] { return fx::small_homology(); }},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    fx::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%s, %.2fs)\n", o.ok ? "PASS" : "FAIL", index, c.name, o.summary().c_str(),
                secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
