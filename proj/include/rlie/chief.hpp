#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/meataxe.hpp"

namespace rlie {

/// Largest p^dim for which minimality of an ideal is certified by enumeration.
inline constexpr std::uint64_t kMinimalityEnumerationLimit = 10000;

/// One factor upper/lower of a (p-)chief series; both are (p-)ideals of L.
struct ChiefFactor {
  Subspace lower;
  Subspace upper;
  bool strongly_abelian = false;       // for ordinary series: abelian
  std::optional<bool> split;           // only for (strongly) abelian factors
  std::optional<std::size_t> iso_class;  // index into an irreducible catalog, when assigned
  std::size_t dim() const noexcept { return upper.dim() - lower.dim(); }
};

struct PChiefSeries {
  std::vector<Subspace> chain;  // 0 = L_0 ⊂ L_1 ⊂ ... ⊂ L_n = L
  std::vector<ChiefFactor> factors;
  std::uint64_t seed = 0;
  bool restricted = true;
};

/// A minimal nonzero p-ideal of q inside the p-ideal `within`: the seeded choice among
/// single-vector closures of least dimension. Certified by checking that every nonzero
/// vector of the result generates all of it.
Subspace minimal_p_ideal(const RestrictedLieAlgebra& q, const Subspace& within, std::uint64_t seed);
/// Same with bracket-only closures.
Subspace minimal_ideal(const RestrictedLieAlgebra& q, const Subspace& within, std::uint64_t seed);

PChiefSeries p_chief_series(const RestrictedLieAlgebra& l, std::uint64_t seed);
PChiefSeries ordinary_chief_series(const RestrictedLieAlgebra& l, std::uint64_t seed);

/// Whether 0 -> I -> Q -> Q/I -> 0 splits as restricted Lie algebras, for a strongly
/// abelian p-ideal I of q. Decided by solving for a correction τ: Q/I -> I of a linear section.
bool is_split_factor(const RestrictedLieAlgebra& q, const Subspace& ideal);
/// The same for an abelian ideal and ordinary Lie algebras (the p-map is ignored).
bool is_split_factor_ordinary(const RestrictedLieAlgebra& q, const Subspace& ideal);

/// upper/lower with the adjoint action of L.
RestrictedModule factor_module(const RestrictedLieAlgebra& l, const ChiefFactor& f);

/// Fills iso_class for every abelian factor. Throws CertificationError if some factor
/// matches no catalog class or fails the irreducibility check.
void assign_classes(const RestrictedLieAlgebra& l, PChiefSeries& series, const IrreducibleCatalog& catalog);

/// Per catalog class: number of split (strongly) abelian factors isomorphic to it.
std::vector<std::size_t> count_split_factors(const PChiefSeries& series, std::size_t classes);

struct MultiplicityRow {
  std::string label;
  std::size_t dim = 0;
  std::size_t d_S = 1;
  std::size_t p_split = 0;         // [L:S]_{p-split}
  std::size_t split_ordinary = 0;  // [L:S]_{split}
  std::size_t rhs_main = 0;        // dim_D H^1(L,S) - dim_D H^1(L/ann,S)
  std::size_t h1_dim_over_D = 0;
  std::size_t h1_dim_F = 0;
};

using MultiplicityReport = std::vector<MultiplicityRow>;

MultiplicityReport multiplicity_report(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog,
                                       const PChiefSeries& series, const PChiefSeries& ordinary);

}  // namespace rlie
