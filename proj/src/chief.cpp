#include "rlie/chief.hpp"

#include <algorithm>
#include <functional>

#include "rlie/cohomology.hpp"

namespace rlie {

namespace {

using Closure = std::function<Subspace(const Subspace&)>;

std::uint64_t count_vectors(unsigned p, std::size_t dim) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= p;
    if (n > kMinimalityEnumerationLimit) return kMinimalityEnumerationLimit + 1;
  }
  return n;
}

// Calls fn on every nonzero vector of w, or only on one representative per line.
void for_each_vector(const Subspace& w, bool projective, const std::function<void(const Vec&)>& fn) {
  const unsigned p = w.basis().p();
  const std::size_t k = w.dim();
  const std::uint64_t total = count_vectors(p, k);
  std::vector<Residue> c(k);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = Residue(x % p);
      x /= p;
    }
    if (projective) {
      std::size_t lead = 0;
      while (c[lead] == 0) ++lead;
      if (c[lead] != 1) continue;
    }
    Vec v(w.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      if (c[i]) vec_axpy(p, v, c[i], w.basis_vector(i));
    fn(v);
  }
}

Subspace line(unsigned p, const Vec& v) { return Subspace::span(p, v.size(), {v}); }

Subspace minimal_closure(const RestrictedLieAlgebra& q, const Subspace& within, std::mt19937_64& rng,
                         const Closure& closure) {
  const unsigned p = q.p();
  if (within.dim() == 0) throw PreconditionError("minimal ideal of the zero subspace");
  Subspace candidate = within;
  for (;;) {
    std::vector<Subspace> best;
    auto consider = [&](const Vec& v) {
      Subspace c = closure(line(p, v));
      if (!best.empty() && c.dim() > best.front().dim()) return;
      if (!best.empty() && c.dim() < best.front().dim()) best.clear();
      if (std::find(best.begin(), best.end(), c) == best.end()) best.push_back(std::move(c));
    };
    const bool exhaustive = count_vectors(p, candidate.dim()) <= kMinimalityEnumerationLimit;
    if (exhaustive) {
      for_each_vector(candidate, true, consider);
    } else {
      for (std::size_t i = 0; i < candidate.dim(); ++i) consider(candidate.basis_vector(i));
      std::uniform_int_distribution<unsigned> dist(0, p - 1);
      for (int t = 0; t < 32; ++t) {
        Vec v(candidate.ambient_dim());
        for (std::size_t i = 0; i < candidate.dim(); ++i) vec_axpy(p, v, Residue(dist(rng)), candidate.basis_vector(i));
        if (!vec_is_zero(v)) consider(v);
      }
    }
    std::sort(best.begin(), best.end(),
              [](const Subspace& a, const Subspace& b) { return a.basis().to_string() < b.basis().to_string(); });
    std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
    Subspace chosen = best[pick(rng)];
    if (!exhaustive && chosen.dim() == candidate.dim())
      throw ThresholdError("minimality of a " + std::to_string(candidate.dim()) +
                           "-dimensional ideal cannot be certified by enumeration");
    candidate = std::move(chosen);
    if (exhaustive) break;
  }
  for_each_vector(candidate, false, [&](const Vec& v) {
    if (!(closure(line(p, v)) == candidate)) throw CertificationError("ideal is not minimal");
  });
  return candidate;
}

Subspace minimal_impl(const RestrictedLieAlgebra& q, const Subspace& within, std::mt19937_64& rng, bool restricted) {
  if (restricted ? !is_p_ideal(q, within) : !is_ideal(q, within))
    throw PreconditionError(restricted ? "minimal_p_ideal: not a p-ideal" : "minimal_ideal: not an ideal");
  Closure closure = [&](const Subspace& s) { return restricted ? p_closure(q, s) : ideal_closure(q, s); };
  return minimal_closure(q, within, rng, closure);
}

bool strongly_abelian_factor(const RestrictedLieAlgebra& l, const Subspace& upper, const Subspace& lower,
                             bool restricted) {
  if (!lower.contains(bracket_span(l, upper, upper))) return false;
  if (!restricted) return true;
  for (std::size_t i = 0; i < upper.dim(); ++i)
    if (!lower.contains(l.pmap(upper.basis_vector(i)))) return false;
  return true;
}

bool split_system(const RestrictedLieAlgebra& q, const Subspace& ideal, bool restricted) {
  const unsigned p = q.p();
  const auto& f = PrimeField::of(p);
  Quotient k = restricted ? quotient(q, ideal) : quotient_ordinary(q, ideal);
  const std::size_t kd = k.algebra.dim(), d = ideal.dim();
  Frame frame(ideal.basis());
  auto in_ideal = [&](const Vec& v) { return frame.coordinates(v); };

  std::vector<Vec> sigma;
  for (std::size_t j = 0; j < kd; ++j) sigma.push_back(k.lift.column(j));
  std::vector<Matrix> rho;
  for (std::size_t j = 0; j < kd; ++j) {
    Matrix r(p, d, d);
    for (std::size_t s = 0; s < d; ++s) r.set_column(s, in_ideal(q.bracket(sigma[j], ideal.basis_vector(s))));
    rho.push_back(std::move(r));
  }

  const std::size_t pairs = kd * (kd > 0 ? kd - 1 : 0) / 2;
  const std::size_t eqs = (pairs + (restricted ? kd : 0)) * d;
  Matrix sys(p, eqs, kd * d);
  Vec rhs(eqs);
  std::size_t row = 0;
  auto add = [&](std::size_t r, std::size_t col, Residue v) { sys.set(r, col, f.add(sys(r, col), v)); };
  // (a) u·τ(v) - v·τ(u) - τ([u,v]) = σ([u,v]) - [σu, σv]
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j) {
      const Vec& c = k.algebra.basis_bracket(i, j);
      Vec target = in_ideal(vec_sub(p, k.lift.apply(c), q.bracket(sigma[i], sigma[j])));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
          add(row + r, j * d + s, rho[i](r, s));
          add(row + r, i * d + s, f.neg(rho[j](r, s)));
        }
        for (std::size_t m = 0; m < kd; ++m)
          if (c[m]) add(row + r, m * d + r, f.neg(c[m]));
        rhs[row + r] = target[r];
      }
      row += d;
    }
  // (b) τ(u^{[p]}) - u^{p-1}·τ(u) = (σu)^{[p]} - σ(u^{[p]})
  if (restricted)
    for (std::size_t i = 0; i < kd; ++i) {
      const Vec& c = k.algebra.basis_pmap(i);
      Vec target = in_ideal(vec_sub(p, q.pmap(sigma[i]), k.lift.apply(c)));
      Matrix power = rho[i].pow(p - 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t m = 0; m < kd; ++m)
          if (c[m]) add(row + r, m * d + r, c[m]);
        for (std::size_t s = 0; s < d; ++s) add(row + r, i * d + s, f.neg(power(r, s)));
        rhs[row + r] = target[r];
      }
      row += d;
    }
  return solve_affine(sys, rhs).has_value();
}

PChiefSeries build_series(const RestrictedLieAlgebra& l, std::uint64_t seed, bool restricted) {
  const unsigned p = l.p();
  std::mt19937_64 rng(seed);
  PChiefSeries series;
  series.seed = seed;
  series.restricted = restricted;
  Subspace lower(p, l.dim());
  series.chain.push_back(lower);
  while (lower.dim() < l.dim()) {
    Quotient q = restricted ? quotient(l, lower) : quotient_ordinary(l, lower);
    Subspace c = minimal_impl(q.algebra, Subspace::full(p, q.algebra.dim()), rng, restricted);
    Subspace upper = sum(lower, image(q.lift, c));
    ChiefFactor factor;
    factor.lower = lower;
    factor.upper = upper;
    factor.strongly_abelian = strongly_abelian_factor(l, upper, lower, restricted);
    if (factor.strongly_abelian) factor.split = split_system(q.algebra, c, restricted);
    series.factors.push_back(std::move(factor));
    series.chain.push_back(upper);
    lower = upper;
  }
  return series;
}

bool irreducible_by_spin(const RestrictedModule& m, std::uint64_t seed) {
  if (count_vectors(m.p, m.dim) > kMinimalityEnumerationLimit) return is_irreducible(m, seed);
  bool ok = true;
  for_each_vector(Subspace::full(m.p, m.dim), true, [&](const Vec& v) {
    if (ok && spin(m, {v}).dim() != m.dim) ok = false;
  });
  return ok;
}

}  // namespace

Subspace minimal_p_ideal(const RestrictedLieAlgebra& q, const Subspace& within, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return minimal_impl(q, within, rng, true);
}

Subspace minimal_ideal(const RestrictedLieAlgebra& q, const Subspace& within, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return minimal_impl(q, within, rng, false);
}

PChiefSeries p_chief_series(const RestrictedLieAlgebra& l, std::uint64_t seed) { return build_series(l, seed, true); }

PChiefSeries ordinary_chief_series(const RestrictedLieAlgebra& l, std::uint64_t seed) {
  return build_series(l, seed, false);
}

bool is_split_factor(const RestrictedLieAlgebra& q, const Subspace& ideal) {
  if (!is_p_ideal(q, ideal) || !strongly_abelian_factor(q, ideal, Subspace(q.p(), q.dim()), true))
    throw PreconditionError("is_split_factor: ideal is not a strongly abelian p-ideal");
  return split_system(q, ideal, true);
}

bool is_split_factor_ordinary(const RestrictedLieAlgebra& q, const Subspace& ideal) {
  if (!is_ideal(q, ideal) || !strongly_abelian_factor(q, ideal, Subspace(q.p(), q.dim()), false))
    throw PreconditionError("is_split_factor_ordinary: ideal is not an abelian ideal");
  return split_system(q, ideal, false);
}

RestrictedModule factor_module(const RestrictedLieAlgebra& l, const ChiefFactor& f) {
  RestrictedModule m = subquotient(adjoint_module(l), f.upper, f.lower);
  m.label = "factor";
  return m;
}

void assign_classes(const RestrictedLieAlgebra& l, PChiefSeries& series, const IrreducibleCatalog& catalog) {
  for (auto& f : series.factors) {
    if (!f.strongly_abelian) continue;
    RestrictedModule m = factor_module(l, f);
    if (!irreducible_by_spin(m, series.seed)) throw CertificationError("abelian chief factor is not irreducible");
    auto cls = find_class(catalog, m);
    if (!cls) throw CertificationError("abelian chief factor matches no irreducible class");
    f.iso_class = *cls;
  }
}

std::vector<std::size_t> count_split_factors(const PChiefSeries& series, std::size_t classes) {
  std::vector<std::size_t> counts(classes);
  for (const auto& f : series.factors)
    if (f.strongly_abelian && f.split.value_or(false) && f.iso_class) counts.at(*f.iso_class)++;
  return counts;
}

MultiplicityReport multiplicity_report(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog,
                                       const PChiefSeries& series, const PChiefSeries& ordinary) {
  auto restricted_counts = count_split_factors(series, catalog.size());
  auto ordinary_counts = count_split_factors(ordinary, catalog.size());
  MultiplicityReport report;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    MultiplicityRow row;
    row.label = catalog[i].label;
    row.dim = catalog[i].module.dim;
    MainFormulaTerms t = main_formula_terms(l, catalog[i].module);
    row.d_S = t.d_S;
    row.p_split = restricted_counts[i];
    row.split_ordinary = ordinary_counts[i];
    row.rhs_main = t.value();
    row.h1_dim_over_D = t.h1_over_D;
    row.h1_dim_F = t.h1_over_D * t.d_S;
    report.push_back(std::move(row));
  }
  return report;
}

}  // namespace rlie
