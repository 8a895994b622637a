#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rlie/module.hpp"

namespace rlie {

/// Random retries per call before the meataxe gives up.
inline constexpr int kMeataxeRetryBudget = 64;

// Polynomials over F_p are coefficient vectors, constant term first.
using Poly = std::vector<Residue>;

/// Distinct monic irreducible factors of g, by degree then coefficients.
std::vector<Poly> irreducible_factors(unsigned p, const Poly& g, std::mt19937_64& rng);
/// Monic irreducible polynomials of the given degree by enumeration (cached; p^degree <= 4096).
const std::vector<Poly>& monic_irreducibles(unsigned p, std::size_t degree);
bool poly_divides(unsigned p, const Poly& divisor, const Poly& dividend);
Matrix poly_eval(const Poly& f, const Matrix& a);

/// Result of one meataxe step: either a proper nonzero submodule, or a certificate
/// (Norton's criterion) that the module is irreducible.
struct SplitResult {
  std::optional<Subspace> submodule;
  Poly certificate_poly;  // the irreducible factor used by the certificate
  bool irreducible() const noexcept { return !submodule.has_value(); }
};

/// Throws CertificationError when the retry budget runs out.
SplitResult meataxe_split(const RestrictedModule& m, std::mt19937_64& rng);
bool is_irreducible(const RestrictedModule& m, std::uint64_t seed);

/// Composition factors with multiplicity; each one carries a passed irreducibility certificate.
std::vector<RestrictedModule> chop(const RestrictedModule& m, std::uint64_t seed);

/// One isomorphism class of irreducible restricted modules.
struct Irreducible {
  RestrictedModule module;
  std::size_t end_dim = 1;  // d_S = dim_F End_L(S)
  std::string label;
  bool trivial = false;
};

using IrreducibleCatalog = std::vector<Irreducible>;

/// Schur: for irreducible a and b, isomorphic iff a nonzero homomorphism exists.
bool module_iso_irreducible(const RestrictedModule& a, const RestrictedModule& b);
/// Index of the class isomorphic to the irreducible module s, if any.
std::optional<std::size_t> find_class(const IrreducibleCatalog& catalog, const RestrictedModule& s);
std::size_t trivial_class(const IrreducibleCatalog& catalog);

/// Deduplicates composition factors into a catalog ordered canonically: trivial
/// module first, then by dimension and basis-independent action invariants.
IrreducibleCatalog catalog_from_factors(const std::vector<RestrictedModule>& factors);

}  // namespace rlie
