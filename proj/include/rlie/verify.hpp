#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlie/chief.hpp"
#include "rlie/enveloping.hpp"

namespace rlie {

/// Number of seeded series compared by the main-formula check.
inline constexpr std::size_t kSeriesSeeds = 20;

/// Everything the checks need, computed once per algebra.
struct AlgebraAnalysis {
  RestrictedLieAlgebra algebra;
  std::uint64_t seed = 0;
  std::optional<UEnvelope> envelope;
  IrreducibleCatalog catalog;
  Radical radical;
  ProjectiveCover cover;
  LoewySeries cover_loewy;
  PChiefSeries series;
  PChiefSeries ordinary;
  MultiplicityReport multiplicities;
  BlockPartition block_partition;
  bool solvable = false;
  std::size_t p_power_dim = 0;        // dim <L^{[p]}>
  std::size_t derived_plus_p_dim = 0;  // dim([L,L] + <L^{[p]}>)
  std::size_t derived_cap_p_dim = 0;   // dim([L,L] ∩ <L^{[p]}>)

  /// Multiplicity of catalog class i in the second Loewy layer of P(F) (0 if P(F) has one layer).
  std::size_t second_layer(std::size_t i) const;
  /// Multiplicity of class i as a composition factor of P(F).
  std::size_t composition_multiplicity(std::size_t i) const;
  bool in_principal_block(std::size_t i) const;
};

AlgebraAnalysis analyze(const RestrictedLieAlgebra& l, std::uint64_t seed = 0);

struct CheckRow {
  std::string label;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;  // "=", "<=", ">=", "iff"
  bool ok = true;
  std::string note;
};

struct VerificationReport {
  std::string algebra;
  std::string theorem;
  bool pass = true;
  std::uint64_t seed = 0;
  double seconds = 0;
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;
  /// CHECK theorem=<id> algebra=<name> status=<PASS|FAIL> seed=<n>
  std::string check_line() const;
  std::string table() const;
};

const std::vector<std::string>& theorem_ids();
/// Throws PreconditionError on an unknown theorem id.
VerificationReport verify(const AlgebraAnalysis& a, const std::string& theorem);

/// Split-factor counts per class for seeds first_seed, first_seed + 1, ...
std::vector<std::vector<std::size_t>> seeded_split_tables(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog,
                                                           std::uint64_t first_seed, std::size_t count);

struct ExploreRow {
  std::string label;
  bool strongly_abelian_factor = false;
  bool principal_block = false;
  std::size_t in_cover = 0;  // composition multiplicity in P(F)
};

/// Observations for the open question on composition factors of P(F); never a pass/fail check.
std::vector<ExploreRow> explore(const AlgebraAnalysis& a);

}  // namespace rlie
