#include "rlie/meataxe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "rlie/cohomology.hpp"

namespace rlie {

namespace {

constexpr std::uint64_t kIrreducibleTableLimit = 4096;

Poly poly_mod(unsigned p, Poly a, const Poly& b) {
  const auto& f = PrimeField::of(p);
  const std::size_t db = b.size() - 1;
  const Residue lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    Residue c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly make_monic(unsigned p, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const auto& f = PrimeField::of(p);
  const Residue inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly poly_sub(unsigned p, Poly a, const Poly& b) {
  const auto& f = PrimeField::of(p);
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_add(unsigned p, Poly a, const Poly& b) {
  const auto& f = PrimeField::of(p);
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_mulmod(unsigned p, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint32_t(a[i]) * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  trim(out);
  return poly_mod(p, std::move(out), m);
}

Poly poly_powmod(unsigned p, Poly base, std::uint64_t e, const Poly& m) {
  Poly result = poly_mod(p, Poly{1}, m);
  base = poly_mod(p, std::move(base), m);
  while (e) {
    if (e & 1) result = poly_mulmod(p, result, base, m);
    base = poly_mulmod(p, base, base, m);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(unsigned p, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(p, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(p, std::move(a));
}

Poly poly_div(unsigned p, Poly a, const Poly& b) {
  const auto& f = PrimeField::of(p);
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  const Residue lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Residue c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = f.sub(a[k + i], f.mul(c, b[i]));
  }
  return q;
}

std::size_t degree(const Poly& a) { return a.size() - 1; }

// Splits a product of distinct irreducibles of degree k using the trace map to F_p.
void equal_degree_split(unsigned p, const Poly& d, std::size_t k, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(d) == k) {
    out.push_back(d);
    return;
  }
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  for (;;) {
    Poly a(degree(d));
    for (auto& c : a) c = Residue(dist(rng));
    trim(a);
    if (a.empty()) continue;
    Poly tr = a, pw = a;
    for (std::size_t i = 1; i < k; ++i) {
      pw = poly_powmod(p, pw, p, d);
      tr = poly_add(p, tr, pw);
    }
    for (unsigned c = 0; c < p; ++c) {
      Poly shifted = poly_sub(p, tr, Poly{Residue(c)});
      Poly g = poly_gcd(p, d, shifted);
      if (!g.empty() && degree(g) > 0 && degree(g) < degree(d)) {
        equal_degree_split(p, g, k, rng, out);
        equal_degree_split(p, poly_div(p, d, g), k, rng, out);
        return;
      }
    }
  }
}

std::vector<Poly> enumerate_irreducibles(unsigned p, std::size_t degree) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(degree + 1);
    f[degree] = 1;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < degree; ++i) {
      f[i] = Residue(c % p);
      c /= p;
    }
    bool irreducible = true;
    for (std::size_t d = 1; 2 * d <= degree && irreducible; ++d)
      for (const auto& g : monic_irreducibles(p, d))
        if (poly_divides(p, g, f)) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(std::move(f));
  }
  return out;
}

std::size_t max_table_degree(unsigned p) {
  std::size_t d = 0;
  std::uint64_t pw = 1;
  while (pw * p <= kIrreducibleTableLimit) {
    pw *= p;
    ++d;
  }
  return d;
}

Vec random_vec(unsigned p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  Vec v(n);
  do {
    for (auto& x : v) x = Residue(dist(rng));
  } while (vec_is_zero(v) && n > 0);
  return v;
}

// Minimal polynomial of v under a (Krylov sequence).
Poly order_polynomial(const Matrix& a, const Vec& v) {
  const unsigned p = a.p();
  const std::size_t n = a.rows();
  IncrementalBasis basis(p, n);
  std::vector<Vec> krylov;
  Vec cur = v;
  while (basis.add(cur)) {
    krylov.push_back(cur);
    cur = a.apply(cur);
  }
  const std::size_t k = krylov.size();
  auto sol = solve_affine(Matrix::from_columns(p, n, krylov), cur);
  if (!sol) throw CertificationError("Krylov dependency not solvable");
  const auto& f = PrimeField::of(p);
  Poly g(k + 1);
  g[k] = 1;
  for (std::size_t i = 0; i < k; ++i) g[i] = f.neg(sol->particular[i]);
  return g;
}

Matrix random_algebra_element(const std::vector<Matrix>& words, unsigned p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> coeff(0, p - 1);
  Matrix a(p, n, n);
  for (const auto& w : words) {
    Residue c = Residue(coeff(rng));
    if (c) a = a + w.scaled(c);
  }
  return a;
}

void collect(const RestrictedModule& m, std::mt19937_64& rng, std::vector<RestrictedModule>& out) {
  SplitResult r = meataxe_split(m, rng);
  if (r.irreducible()) {
    RestrictedModule irr = m;
    irr.provenance = Provenance::irreducible;
    out.push_back(std::move(irr));
    return;
  }
  collect(submodule(m, *r.submodule), rng, out);
  collect(quotient_module(m, *r.submodule), rng, out);
}

std::vector<long long> invariants(const RestrictedModule& m) {
  std::vector<long long> key{static_cast<long long>(m.dim)};
  for (const auto& a : m.action) {
    key.push_back(static_cast<long long>(rank(a)));
    Matrix pw = Matrix::identity(m.p, m.dim);
    for (std::size_t k = 1; k <= m.dim; ++k) {
      pw = pw * a;
      unsigned tr = 0;
      for (std::size_t i = 0; i < m.dim; ++i) tr += pw(i, i);
      key.push_back(tr % m.p);
    }
  }
  return key;
}

}  // namespace

bool poly_divides(unsigned p, const Poly& divisor, const Poly& dividend) {
  return poly_mod(p, dividend, divisor).empty();
}

const std::vector<Poly>& monic_irreducibles(unsigned p, std::size_t degree) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<unsigned, std::size_t>, std::vector<Poly>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find({p, degree});
  if (it != cache.end()) return it->second;
  if (degree == 0 || degree > max_table_degree(p))
    throw ThresholdError("irreducible polynomial table limited to p^degree <= " + std::to_string(kIrreducibleTableLimit));
  auto polys = enumerate_irreducibles(p, degree);
  return cache.emplace(std::make_pair(p, degree), std::move(polys)).first->second;
}

std::vector<Poly> irreducible_factors(unsigned p, const Poly& g, std::mt19937_64& rng) {
  Poly h = make_monic(p, g);
  if (h.empty()) throw PreconditionError("irreducible_factors: zero polynomial");
  std::vector<Poly> out;
  const Poly x{0, 1};
  Poly xp = poly_mod(p, x, h);
  for (std::size_t k = 1; degree(h) > 0; ++k) {
    xp = poly_powmod(p, poly_mod(p, xp, h), p, h);
    Poly d = poly_gcd(p, h, poly_sub(p, xp, x));
    if (degree(d) == 0) continue;
    equal_degree_split(p, d, k, rng, out);
    for (Poly c = d; degree(c) > 0; c = poly_gcd(p, h, d)) h = poly_div(p, h, c);
  }
  std::stable_sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Matrix poly_eval(const Poly& f, const Matrix& a) {
  Matrix out(a.p(), a.rows(), a.cols());
  const Matrix id = Matrix::identity(a.p(), a.rows());
  for (std::size_t i = f.size(); i-- > 0;) out = out * a + id.scaled(f[i]);
  return out;
}

SplitResult meataxe_split(const RestrictedModule& m, std::mt19937_64& rng) {
  const std::size_t n = m.dim;
  const unsigned p = m.p;
  if (n == 0) throw PreconditionError("meataxe: zero module");
  if (n == 1) return {};

  std::vector<Matrix> transposes;
  for (const auto& a : m.action) transposes.push_back(a.transpose());
  std::vector<Matrix> words = m.action;

  for (int attempt = 0; attempt < kMeataxeRetryBudget; ++attempt) {
    if (!words.empty() && words.size() < 16) {
      std::uniform_int_distribution<std::size_t> w(0, words.size() - 1);
      words.push_back(words[w(rng)] * words[w(rng)]);
    }
    Matrix a = random_algebra_element(words, p, n, rng);
    Poly g = order_polynomial(a, random_vec(p, n, rng));
    for (const auto& f : irreducible_factors(p, g, rng)) {
      const std::size_t deg = f.size() - 1;
      {
        Matrix fa = poly_eval(f, a);
        Matrix kernel = kernel_basis(fa);
        Subspace u = spin(m, {kernel.row_vec(0)});
        if (u.dim() < n) return {u, {}};
        if (kernel.rows() != deg) continue;
        // Norton: the kernel is one-dimensional over F_p[x]/(f); test the dual side.
        Matrix dual_kernel = kernel_basis(fa.transpose());
        Subspace w = spin(transposes, {dual_kernel.row_vec(0)}, n, p);
        if (w.dim() < n) return {Subspace::span(kernel_basis(w.basis())), {}};
        SplitResult cert;
        cert.certificate_poly = f;
        return cert;
      }
    }
  }
  throw CertificationError("meataxe: no split and no irreducibility certificate within the retry budget (dim " +
                           std::to_string(n) + ")");
}

bool is_irreducible(const RestrictedModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return meataxe_split(m, rng).irreducible();
}

std::vector<RestrictedModule> chop(const RestrictedModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RestrictedModule> out;
  if (m.dim > 0) collect(m, rng, out);
  return out;
}

bool module_iso_irreducible(const RestrictedModule& a, const RestrictedModule& b) {
  if (a.dim != b.dim || a.p != b.p || a.action.size() != b.action.size()) return false;
  return hom_modules(a, b).dim() > 0;
}

std::optional<std::size_t> find_class(const IrreducibleCatalog& catalog, const RestrictedModule& s) {
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (module_iso_irreducible(catalog[i].module, s)) return i;
  return std::nullopt;
}

std::size_t trivial_class(const IrreducibleCatalog& catalog) {
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].trivial) return i;
  throw CertificationError("catalog has no trivial module");
}

IrreducibleCatalog catalog_from_factors(const std::vector<RestrictedModule>& factors) {
  IrreducibleCatalog cat;
  for (const auto& f : factors) {
    if (find_class(cat, f)) continue;
    Irreducible irr;
    irr.module = f;
    irr.module.provenance = Provenance::irreducible;
    irr.end_dim = end_dim(f);
    irr.trivial = f.dim == 1 && is_trivial_action(f);
    cat.push_back(std::move(irr));
  }
  std::vector<std::vector<long long>> keys;
  std::vector<std::size_t> order(cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    order[i] = i;
    auto key = invariants(cat[i].module);
    key.insert(key.begin(), cat[i].trivial ? 0 : 1);
    keys.push_back(std::move(key));
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  IrreducibleCatalog sorted;
  for (auto i : order) sorted.push_back(std::move(cat[i]));

  std::map<std::size_t, std::size_t> per_dim;
  for (const auto& irr : sorted) per_dim[irr.module.dim]++;
  std::map<std::size_t, std::size_t> seen;
  for (auto& irr : sorted) {
    const std::size_t d = irr.module.dim;
    if (irr.trivial) {
      irr.label = "F";
    } else if (d == 1) {
      std::ostringstream os;
      os << "F(";
      for (std::size_t k = 0; k < irr.module.action.size(); ++k) os << (k ? "," : "") << unsigned(irr.module.action[k](0, 0));
      os << ")";
      irr.label = os.str();
    } else {
      irr.label = "S" + std::to_string(d);
      if (per_dim[d] > 1) irr.label += "_" + std::to_string(++seen[d]);
    }
    irr.module.label = irr.label;
  }
  return sorted;
}

}  // namespace rlie
