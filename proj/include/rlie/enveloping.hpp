#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/meataxe.hpp"
#include "rlie/module.hpp"

namespace rlie {

/// Largest p^n for which the restricted enveloping algebra is built.
inline constexpr std::uint64_t kEnvelopeDimLimit = 2048;

/// The restricted enveloping algebra u(L) on its PBW basis e_1^{a_1}...e_n^{a_n},
/// 0 <= a_i < p, with monomial index sum a_i p^{i-1}. Index 0 is the unit.
class UEnvelope {
 public:
  /// Throws ThresholdError when p^dim L exceeds kEnvelopeDimLimit.
  explicit UEnvelope(const RestrictedLieAlgebra& l);

  const RestrictedLieAlgebra& algebra() const noexcept { return l_; }
  unsigned p() const noexcept { return l_.p(); }
  std::size_t dim() const noexcept { return dim_; }

  std::vector<unsigned> exponents(std::size_t index) const;
  std::size_t index_of(const std::vector<unsigned>& exps) const;
  Vec one() const { return unit_vec(dim_, 0); }
  /// The image of x ∈ L (degree-one monomials).
  Vec embed(const Vec& x) const;

  /// Left multiplication by monomial m, as a dim x dim matrix.
  const Matrix& monomial_left(std::size_t m) const { return monomial_left_.at(m); }
  /// Left multiplication by e_i.
  const Matrix& generator_left(std::size_t i) const { return monomial_left_.at(generator_index(i)); }
  std::size_t generator_index(std::size_t i) const { return powers_.at(i); }

  Matrix left_multiplication(const Vec& a) const;
  Vec multiply(const Vec& a, const Vec& b) const;

  /// u(L) as a left module over itself.
  RestrictedModule regular_module() const;

 private:
  RestrictedLieAlgebra l_;
  std::size_t dim_;
  std::vector<std::size_t> powers_;
  std::vector<Matrix> monomial_left_;
};

/// ρ_M(m) for every PBW monomial m, so that u(L) elements act through linear combinations.
std::vector<Matrix> monomial_actions(const UEnvelope& u, const RestrictedModule& m);
Matrix element_action(const std::vector<Matrix>& monomial_actions, const Vec& a);

/// Spot check of (ab)c = a(bc) on random triples and of the defining relations on the basis.
bool check_envelope(const UEnvelope& u, std::size_t triples, std::uint64_t seed);

/// Irreducible restricted modules: composition factors of the regular module, deduplicated.
IrreducibleCatalog irreducible_catalog(const UEnvelope& u, std::uint64_t seed);

struct Radical {
  Subspace ideal;                 // Jac u(L) inside u(L)
  std::vector<Vec> generators;    // generate Jac as a left ideal
  std::size_t nilpotency = 0;     // least k with Jac^k = 0
};

/// Intersection of the annihilators of the catalog modules. Certifies that u/Jac has
/// the dimension predicted by Wedderburn and that Jac is nilpotent.
Radical jacobson_radical(const UEnvelope& u, const IrreducibleCatalog& catalog);

/// Jac·V for a submodule V of M.
Subspace radical_of(const UEnvelope& u, const Radical& jac, const RestrictedModule& m, const Subspace& v);

struct LoewyLayer {
  RestrictedModule module;
  std::vector<std::size_t> multiplicities;  // one per catalog class
};

struct LoewySeries {
  std::vector<Subspace> chain;  // M = R_0 ⊋ R_1 ⊋ ... ⊋ R_ℓ = 0
  std::vector<LoewyLayer> layers;
  std::size_t length() const noexcept { return layers.size(); }
};

/// Radical layers of M with the multiplicity of each irreducible in each layer.
/// Every layer is certified semisimple by the dimension count.
LoewySeries loewy_series(const UEnvelope& u, const Radical& jac, const IrreducibleCatalog& catalog,
                         const RestrictedModule& m);

struct ProjectiveCover {
  Vec idempotent;      // primitive e with u(L)e ≅ P(F)
  Subspace span;       // u(L)e inside the regular module
  RestrictedModule module;
};

/// P(F) = u(L)e for an idempotent lifted from the trivial block of u/Jac.
ProjectiveCover projective_cover_trivial(const UEnvelope& u, const Radical& jac, const IrreducibleCatalog& catalog);

/// dim_F Ext^1_{u(L)}(S, T) = dim H^1_*(L, Hom_F(S, T)).
std::size_t ext1(const RestrictedLieAlgebra& l, const RestrictedModule& s, const RestrictedModule& t);
/// dim_F Ext^1_{u(L)}(F, S) from the augmentation ideal: dim Hom_u(I, S) - (dim S - dim S^L).
std::size_t ext1_trivial_oracle(const UEnvelope& u, const RestrictedModule& s);

struct BlockPartition {
  std::vector<std::vector<std::size_t>> blocks;  // catalog indices
  std::vector<std::size_t> block_of;
  std::vector<std::vector<std::size_t>> ext_table;  // ext_table[i][j] = dim Ext^1(S_i, S_j)
  std::size_t principal() const { return block_of.at(0); }
};

/// Connected components of the graph with an edge when Ext^1 is nonzero in either direction.
BlockPartition blocks(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog);

}  // namespace rlie
