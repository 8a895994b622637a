#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rlie/ffla.hpp"

namespace rlie {

struct RestrictedModule;

/// A finite-dimensional restricted Lie algebra over F_p given by structure
/// constants on a basis and the p-map images of the basis elements.
///
/// Only brackets [e_i, e_j] with i < j are supplied; [e_i, e_i] = 0 and
/// [e_j, e_i] = -[e_i, e_j] are implied, which keeps the representation
/// alternating in characteristic 2 as well.
class RestrictedLieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  RestrictedLieAlgebra() : RestrictedLieAlgebra(2, {}, {}, {}) {}
  /// Structural checks only (sizes, index order, residues); use validate() for the algebraic ones.
  RestrictedLieAlgebra(unsigned p, std::vector<std::string> basis_names, const BracketTable& brackets,
                       std::vector<Vec> pmap, std::string name = {});

  unsigned p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// Coefficients of [e_i, e_j].
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return brackets_.at(i * dim() + j); }
  /// Coefficients of e_i^{[p]}.
  const Vec& basis_pmap(std::size_t i) const { return pmap_.at(i); }
  /// ad(e_i) as a dim x dim matrix (column k holds [e_i, e_k]).
  const Matrix& ad_basis(std::size_t i) const { return ad_.at(i); }

  Vec bracket(const Vec& u, const Vec& v) const;
  Matrix ad(const Vec& v) const;
  /// The p-map at an arbitrary element, assembled from the basis images with
  /// Jacobson's formula. Meaningful only for validated algebras.
  Vec pmap(const Vec& v) const;

  Vec zero() const { return zero_vec(dim()); }
  Vec basis_element(std::size_t i) const { return unit_vec(dim(), i); }

 private:
  unsigned p_;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Vec> brackets_;  // full n*n table
  std::vector<Vec> pmap_;
  std::vector<Matrix> ad_;
};

/// Jacobson's correction sum_{i=1}^{p-1} s_i(a, b), so that
/// (a + b)^{[p]} = a^{[p]} + b^{[p]} + jacobson_correction(a, b).
Vec jacobson_correction(const RestrictedLieAlgebra& l, const Vec& a, const Vec& b);

struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> jacobi_failures;  // basis triples i < j < k
  std::vector<std::size_t> pmap_failures;                   // indices with ad(e_i)^p != ad(e_i^{[p]})

  bool ok() const noexcept { return jacobi_failures.empty() && pmap_failures.empty(); }
  std::string summary(const RestrictedLieAlgebra& l) const;
};

ValidationReport validate(const RestrictedLieAlgebra& l);

/// [U, V] as a subspace of L.
Subspace bracket_span(const RestrictedLieAlgebra& l, const Subspace& u, const Subspace& v);
Subspace derived_algebra(const RestrictedLieAlgebra& l);
/// L = L^(0) ⊇ L^(1) ⊇ ... down to the first repeated term.
std::vector<Subspace> derived_series(const RestrictedLieAlgebra& l);
bool is_solvable(const RestrictedLieAlgebra& l);

/// Largest p^n for which p_power_span enumerates the whole algebra.
inline constexpr std::uint64_t kPPowerEnumerationLimit = 100000;

/// The span of {v^{[p]} : v ∈ L}, by enumeration of all p^n elements.
/// Throws ThresholdError when p^n exceeds kPPowerEnumerationLimit.
Subspace p_power_span(const RestrictedLieAlgebra& l);
/// [I, I] + span of basis p-images of I; equals [I,I] + <I^{[p]}> for a p-ideal I.
Subspace p_derived_subspace(const RestrictedLieAlgebra& l, const Subspace& ideal);
bool is_p_perfect(const RestrictedLieAlgebra& l);
bool is_abelian(const RestrictedLieAlgebra& l);
bool is_strongly_abelian(const RestrictedLieAlgebra& l);

bool is_ideal(const RestrictedLieAlgebra& l, const Subspace& s);
bool is_p_ideal(const RestrictedLieAlgebra& l, const Subspace& s);
/// Smallest ideal containing seed (p-map ignored).
Subspace ideal_closure(const RestrictedLieAlgebra& l, const Subspace& seed);
/// Smallest p-ideal containing seed.
Subspace p_closure(const RestrictedLieAlgebra& l, const Subspace& seed);

struct Quotient {
  RestrictedLieAlgebra algebra;
  Matrix projection;  // dim(L/I) x dim(L), maps L-coordinates to quotient coordinates
  Matrix lift;        // dim(L) x dim(L/I), a linear section: projection * lift = identity
};

/// L/I for a p-ideal I. Throws PreconditionError if I is not a p-ideal.
Quotient quotient(const RestrictedLieAlgebra& l, const Subspace& ideal);
/// L/I for an ordinary ideal I, as a Lie algebra only: the p-map of the result is zero
/// and must not be used.
Quotient quotient_ordinary(const RestrictedLieAlgebra& l, const Subspace& ideal);

/// M ⋊ K with p-map (m, x)^{[p]} = (x^{p-1}·m, x^{[p]}). Basis: M's basis (named
/// m1, m2, ...) followed by K's basis.
RestrictedLieAlgebra semidirect_product(const RestrictedLieAlgebra& k, const RestrictedModule& m,
                                        std::string name = {});
RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b, std::string name = {});

/// {x ∈ L : x·M = 0}; always a p-ideal.
Subspace annihilator(const RestrictedLieAlgebra& l, const RestrictedModule& m);

/// Images of the vectors of s under f: a subspace of the codomain of the matrix.
Subspace image(const Matrix& f, const Subspace& s);

}  // namespace rlie
