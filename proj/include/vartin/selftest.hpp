#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vartin/crystal.hpp"

namespace vartin {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  std::uint64_t seed = 20240611;
};

/// Runs the twelve acceptance checks on the bundled corpus.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});
std::string format_results(const std::vector<CriterionResult>& results);

// Seeded samplers shared with the test suites.
using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive
VAWord random_va_word(Rng& rng, const CoxeterGraph& g, int max_len);
VertexWord random_vertex_word(Rng& rng, const CoxeterGraph& g, int max_len);
/// Pure entries in [-bound, bound] on at most `max_support` roots. With
/// `torsion`, entries come in pairs +v, -v on one rho(theta)-orbit so that
/// every orbit sum vanishes.
CrystalElement random_crystal_element(Rng& rng, const RootSystem& rs,
                                      const WGroupTable& table, int bound,
                                      int max_support, bool torsion);

}  // namespace vartin
