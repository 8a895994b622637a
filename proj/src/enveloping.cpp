#include "rlie/enveloping.hpp"

#include <numeric>
#include <random>

#include "rlie/cohomology.hpp"

namespace rlie {

namespace {

// Left multiplication of PBW monomials by generators, by straightening.
class Straightener {
 public:
  Straightener(const RestrictedLieAlgebra& l, std::size_t dim, const std::vector<std::size_t>& powers)
      : l_(l), n_(l.dim()), dim_(dim), powers_(powers), memo_(n_ * dim), state_(n_ * dim, 0) {}

  // e_k · m
  const Vec& mul(std::size_t k, std::size_t m) {
    const std::size_t slot = k * dim_ + m;
    if (state_[slot] == 2) return memo_[slot];
    if (state_[slot] == 1) throw CertificationError("PBW straightening does not terminate");
    state_[slot] = 1;
    memo_[slot] = compute(k, m);
    state_[slot] = 2;
    return memo_[slot];
  }

 private:
  unsigned exponent(std::size_t m, std::size_t i) const { return unsigned((m / powers_[i]) % l_.p()); }

  Vec compute(std::size_t k, std::size_t m) {
    const unsigned p = l_.p();
    std::size_t first = n_;
    for (std::size_t i = 0; i < n_; ++i)
      if (exponent(m, i) > 0) {
        first = i;
        break;
      }
    Vec out(dim_);
    if (k < first || (k == first && exponent(m, k) + 1 < p)) {
      out[m + powers_[k]] = 1;
      return out;
    }
    if (k == first) {
      // e_k^p = e_k^{[p]} in u(L)
      const std::size_t rest = m - (p - 1) * powers_[k];
      const Vec& c = l_.basis_pmap(k);
      for (std::size_t j = 0; j < n_; ++j)
        if (c[j]) vec_axpy(p, out, c[j], Vec(mul(j, rest)));
      return out;
    }
    // k > first: e_k e_first m' = e_first (e_k m') + [e_k, e_first] m'
    const std::size_t rest = m - powers_[first];
    const Vec t = mul(k, rest);
    for (std::size_t u = 0; u < dim_; ++u)
      if (t[u]) vec_axpy(p, out, t[u], Vec(mul(first, u)));
    const Vec& c = l_.basis_bracket(k, first);
    for (std::size_t j = 0; j < n_; ++j)
      if (c[j]) vec_axpy(p, out, c[j], Vec(mul(j, rest)));
    return out;
  }

  const RestrictedLieAlgebra& l_;
  std::size_t n_, dim_;
  const std::vector<std::size_t>& powers_;
  std::vector<Vec> memo_;
  std::vector<unsigned char> state_;
};

std::size_t first_index(const UEnvelope& u, std::size_t m) {
  auto e = u.exponents(m);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) return i;
  return e.size();
}

Matrix evaluation_system(const UEnvelope& u, const IrreducibleCatalog& catalog) {
  std::size_t rows = 0;
  for (const auto& s : catalog) rows += s.module.dim * s.module.dim;
  Matrix sys(u.p(), rows, u.dim());
  std::size_t offset = 0;
  for (const auto& s : catalog) {
    const std::size_t d = s.module.dim;
    auto acts = monomial_actions(u, s.module);
    for (std::size_t m = 0; m < u.dim(); ++m)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) sys.set(offset + r * d + c, m, acts[m](r, c));
    offset += d * d;
  }
  return sys;
}

std::vector<Matrix> generator_actions(const UEnvelope& u, const Radical& jac, const RestrictedModule& m) {
  auto acts = monomial_actions(u, m);
  std::vector<Matrix> out;
  for (const auto& g : jac.generators) out.push_back(element_action(acts, g));
  return out;
}

Subspace radical_step(const RestrictedModule& m, const std::vector<Matrix>& gen_actions, const Subspace& v) {
  std::vector<Vec> seeds;
  for (const auto& g : gen_actions)
    for (std::size_t i = 0; i < v.dim(); ++i) seeds.push_back(g.apply(v.basis_vector(i)));
  return spin(m, seeds);
}

Vec random_element(unsigned p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  Vec v(n);
  for (auto& x : v) x = Residue(dist(rng));
  return v;
}

}  // namespace

UEnvelope::UEnvelope(const RestrictedLieAlgebra& l) : l_(l), dim_(1) {
  for (std::size_t i = 0; i < l.dim(); ++i) {
    powers_.push_back(dim_);
    if (dim_ * l.p() > kEnvelopeDimLimit)
      throw ThresholdError("u(L) has dimension above " + std::to_string(kEnvelopeDimLimit));
    dim_ *= l.p();
  }
  Straightener st(l_, dim_, powers_);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < l.dim(); ++k) {
    Matrix g(l.p(), dim_, dim_);
    for (std::size_t m = 0; m < dim_; ++m) g.set_column(m, st.mul(k, m));
    gens.push_back(std::move(g));
  }
  monomial_left_.reserve(dim_);
  monomial_left_.push_back(Matrix::identity(l.p(), dim_));
  for (std::size_t m = 1; m < dim_; ++m) {
    std::size_t f = first_index(*this, m);
    monomial_left_.push_back(gens[f] * monomial_left_[m - powers_[f]]);
  }
}

std::vector<unsigned> UEnvelope::exponents(std::size_t index) const {
  if (index >= dim_) throw DimensionError("monomial index out of range");
  std::vector<unsigned> e(l_.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = unsigned(index % l_.p());
    index /= l_.p();
  }
  return e;
}

std::size_t UEnvelope::index_of(const std::vector<unsigned>& exps) const {
  if (exps.size() != l_.dim()) throw DimensionError("exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] >= l_.p()) throw DimensionError("PBW exponent must be below p");
    idx += exps[i] * powers_[i];
  }
  return idx;
}

Vec UEnvelope::embed(const Vec& x) const {
  if (x.size() != l_.dim()) throw DimensionError("embed: element has wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < x.size(); ++i) out[powers_[i]] = x[i];
  return out;
}

Matrix UEnvelope::left_multiplication(const Vec& a) const { return element_action(monomial_left_, a); }

Vec UEnvelope::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("multiply: wrong length");
  Vec out(dim_);
  for (std::size_t m = 0; m < dim_; ++m)
    if (a[m]) vec_axpy(p(), out, a[m], monomial_left_[m].apply(b));
  return out;
}

RestrictedModule UEnvelope::regular_module() const {
  RestrictedModule m;
  m.p = p();
  m.dim = dim_;
  for (std::size_t i = 0; i < l_.dim(); ++i) m.action.push_back(generator_left(i));
  m.label = "u(L)";
  m.provenance = Provenance::regular;
  return m;
}

std::vector<Matrix> monomial_actions(const UEnvelope& u, const RestrictedModule& m) {
  if (m.p != u.p() || m.action.size() != u.algebra().dim()) throw PreconditionError("module does not belong to the algebra");
  std::vector<Matrix> out;
  out.reserve(u.dim());
  out.push_back(Matrix::identity(m.p, m.dim));
  for (std::size_t idx = 1; idx < u.dim(); ++idx) {
    std::size_t f = first_index(u, idx);
    out.push_back(m.action[f] * out[idx - u.generator_index(f)]);
  }
  return out;
}

Matrix element_action(const std::vector<Matrix>& acts, const Vec& a) {
  if (acts.empty() || a.size() != acts.size()) throw DimensionError("element_action: wrong length");
  Matrix out(acts[0].p(), acts[0].rows(), acts[0].cols());
  for (std::size_t m = 0; m < a.size(); ++m)
    if (a[m]) out = out + acts[m].scaled(a[m]);
  return out;
}

bool check_envelope(const UEnvelope& u, std::size_t triples, std::uint64_t seed) {
  const auto& l = u.algebra();
  const unsigned p = u.p();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vec ei = u.embed(l.basis_element(i));
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vec ej = u.embed(l.basis_element(j));
      Vec comm = vec_sub(p, u.multiply(ei, ej), u.multiply(ej, ei));
      if (comm != u.embed(l.basis_bracket(i, j))) return false;
    }
    Vec power = u.one();
    for (unsigned k = 0; k < p; ++k) power = u.multiply(ei, power);
    if (power != u.embed(l.basis_pmap(i))) return false;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < triples; ++t) {
    Vec a = random_element(p, u.dim(), rng), b = random_element(p, u.dim(), rng), c = random_element(p, u.dim(), rng);
    if (u.multiply(u.multiply(a, b), c) != u.multiply(a, u.multiply(b, c))) return false;
  }
  return true;
}

IrreducibleCatalog irreducible_catalog(const UEnvelope& u, std::uint64_t seed) {
  return catalog_from_factors(chop(u.regular_module(), seed));
}

Radical jacobson_radical(const UEnvelope& u, const IrreducibleCatalog& catalog) {
  Radical jac;
  jac.ideal = Subspace::span(kernel_basis(evaluation_system(u, catalog)));
  std::size_t semisimple = 0;
  for (const auto& s : catalog) {
    const std::size_t sq = s.module.dim * s.module.dim;
    if (s.end_dim == 0 || sq % s.end_dim != 0) throw CertificationError("irreducible with inconsistent endomorphism dimension");
    semisimple += sq / s.end_dim;
  }
  if (u.dim() - jac.ideal.dim() != semisimple)
    throw CertificationError("dim u/Jac = " + std::to_string(u.dim() - jac.ideal.dim()) +
                             " but the irreducibles account for " + std::to_string(semisimple));

  const RestrictedModule reg = u.regular_module();
  Subspace generated(u.p(), u.dim());
  for (std::size_t i = 0; i < jac.ideal.dim() && generated.dim() < jac.ideal.dim(); ++i) {
    Vec b = jac.ideal.basis_vector(i);
    if (generated.contains(b)) continue;
    jac.generators.push_back(b);
    generated = spin(reg, jac.generators);
  }
  if (!(generated == jac.ideal)) throw CertificationError("radical generators do not span the radical");

  std::vector<Matrix> gens;
  for (const auto& g : jac.generators) gens.push_back(u.left_multiplication(g));
  Subspace power = Subspace::full(u.p(), u.dim());
  jac.nilpotency = 0;
  while (power.dim() > 0) {
    Subspace next = radical_step(reg, gens, power);
    if (next.dim() == power.dim()) throw CertificationError("radical is not nilpotent");
    if (jac.nilpotency == 0 && !(next == jac.ideal)) throw CertificationError("Jac·u(L) differs from Jac");
    power = next;
    ++jac.nilpotency;
  }
  return jac;
}

Subspace radical_of(const UEnvelope& u, const Radical& jac, const RestrictedModule& m, const Subspace& v) {
  return radical_step(m, generator_actions(u, jac, m), v);
}

LoewySeries loewy_series(const UEnvelope& u, const Radical& jac, const IrreducibleCatalog& catalog,
                         const RestrictedModule& m) {
  LoewySeries series;
  auto gens = generator_actions(u, jac, m);
  Subspace cur = Subspace::full(m.p, m.dim);
  series.chain.push_back(cur);
  while (cur.dim() > 0) {
    Subspace next = radical_step(m, gens, cur);
    if (next.dim() == cur.dim()) throw CertificationError("radical series stalls");
    LoewyLayer layer;
    layer.module = subquotient(m, cur, next);
    layer.module.provenance = Provenance::layer;
    layer.module.label = m.label + "/layer" + std::to_string(series.layers.size() + 1);
    std::size_t accounted = 0;
    for (const auto& s : catalog) {
      std::size_t h = hom_modules(layer.module, s.module).dim();
      if (h % s.end_dim != 0) throw CertificationError("layer multiplicity not integral");
      layer.multiplicities.push_back(h / s.end_dim);
      accounted += (h / s.end_dim) * s.module.dim;
    }
    if (accounted != layer.module.dim) throw CertificationError("radical layer is not semisimple over the catalog");
    series.layers.push_back(std::move(layer));
    series.chain.push_back(next);
    cur = next;
  }
  return series;
}

ProjectiveCover projective_cover_trivial(const UEnvelope& u, const Radical& jac, const IrreducibleCatalog& catalog) {
  const unsigned p = u.p();
  const std::size_t t = trivial_class(catalog);
  Matrix sys = evaluation_system(u, catalog);
  Vec target(sys.rows());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i == t) target[offset] = 1;
    offset += catalog[i].module.dim * catalog[i].module.dim;
  }
  auto sol = solve_affine(sys, target);
  if (!sol) throw CertificationError("no element of u(L) separates the trivial module");
  Vec e = sol->particular;
  std::size_t iterations = 1;
  while ((std::size_t(1) << (iterations - 1)) < jac.nilpotency) ++iterations;
  const auto& f = PrimeField::of(p);
  for (std::size_t k = 0; k < iterations; ++k) {
    Vec e2 = u.multiply(e, e);
    Vec e3 = u.multiply(e2, e);
    e = vec_sub(p, vec_scale(p, f.reduce(3), e2), vec_scale(p, f.reduce(2), e3));
  }
  if (u.multiply(e, e) != e) throw CertificationError("idempotent lifting did not converge");

  RestrictedModule reg = u.regular_module();
  ProjectiveCover pc;
  pc.idempotent = e;
  pc.span = spin(reg, {e});
  Subspace other = spin(reg, {vec_sub(p, u.one(), e)});
  if (pc.span.dim() + other.dim() != u.dim() || sum(pc.span, other).dim() != u.dim())
    throw CertificationError("u(L)e and u(L)(1-e) do not decompose u(L)");
  pc.module = submodule(reg, pc.span);
  pc.module.label = "P(F)";
  pc.module.provenance = Provenance::projective;
  Subspace rad = radical_of(u, jac, pc.module, Subspace::full(p, pc.module.dim));
  if (pc.module.dim - rad.dim() != 1 || !is_trivial_action(quotient_module(pc.module, rad)))
    throw CertificationError("top of u(L)e is not the trivial module");
  return pc;
}

std::size_t ext1(const RestrictedLieAlgebra& l, const RestrictedModule& s, const RestrictedModule& t) {
  return h1_restricted(l, hom_space_module(s, t)).dim_F;
}

std::size_t ext1_trivial_oracle(const UEnvelope& u, const RestrictedModule& s) {
  const unsigned p = u.p();
  const std::size_t n = u.dim(), k = n - 1;
  RestrictedModule aug;
  aug.p = p;
  aug.dim = k;
  for (std::size_t i = 0; i < u.algebra().dim(); ++i) {
    const Matrix& g = u.generator_left(i);
    Matrix a(p, k, k);
    for (std::size_t c = 1; c < n; ++c) {
      if (g(0, c)) throw CertificationError("augmentation ideal is not a left ideal");
      for (std::size_t r = 1; r < n; ++r) a.set(r - 1, c - 1, g(r, c));
    }
    aug.action.push_back(std::move(a));
  }
  Subspace homs = hom_modules(aug, s);
  auto acts = monomial_actions(u, s);
  std::vector<Vec> evaluations;
  for (std::size_t j = 0; j < s.dim; ++j) {
    Vec sv = unit_vec(s.dim, j);
    Vec flat(s.dim * k);
    for (std::size_t m = 1; m < n; ++m) {
      Vec img = acts[m].apply(sv);
      for (std::size_t r = 0; r < s.dim; ++r) flat[r * k + (m - 1)] = img[r];
    }
    if (!homs.contains(flat)) throw CertificationError("evaluation map is not a module homomorphism");
    evaluations.push_back(std::move(flat));
  }
  return homs.dim() - Subspace::span(p, s.dim * k, evaluations).dim();
}

BlockPartition blocks(const RestrictedLieAlgebra& l, const IrreducibleCatalog& catalog) {
  const std::size_t c = catalog.size();
  BlockPartition bp;
  bp.ext_table.assign(c, std::vector<std::size_t>(c));
  std::vector<std::size_t> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      bp.ext_table[i][j] = ext1(l, catalog[i].module, catalog[j].module);
      if (bp.ext_table[i][j]) parent[find(i)] = find(j);
    }
  bp.block_of.assign(c, 0);
  std::vector<std::size_t> root_block(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t r = find(i);
    if (root_block[r] == c) {
      root_block[r] = bp.blocks.size();
      bp.blocks.emplace_back();
    }
    bp.block_of[i] = root_block[r];
    bp.blocks[root_block[r]].push_back(i);
  }
  return bp;
}

}  // namespace rlie
