#pragma once

// Slow, independent reference computations used only by the tests. Nothing here
// calls into the library's solvers; only the data types and basic vector helpers
// are shared.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/module.hpp"

namespace oracle {

using rlie::Matrix;
using rlie::Residue;
using rlie::Vec;

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Calls f on every vector of F_p^n, in lexicographic order of the index.
inline void for_each_vector(unsigned p, std::size_t n, const std::function<void(const Vec&)>& f) {
  Vec v(n, 0);
  const std::uint64_t total = ipow(p, n);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t t = k;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Residue(t % p);
      t /= p;
    }
    f(v);
  }
}

/// Every element of the span of the given vectors (with repetitions collapsed).
inline std::set<Vec> span_elements(unsigned p, std::size_t n, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  for_each_vector(p, gens.size(), [&](const Vec& c) {
    Vec s(n, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) rlie::vec_axpy(p, s, c[i], gens[i]);
    out.insert(s);
  });
  if (gens.empty()) out.insert(Vec(n, 0));
  return out;
}

/// Dimension of a span, from the number of its elements.
inline std::size_t span_dim(unsigned p, std::size_t n, const std::vector<Vec>& gens) {
  std::size_t count = span_elements(p, n, gens).size();
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

inline Vec mat_vec(const Matrix& a, const Vec& v) {
  const unsigned p = a.p();
  Vec out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    unsigned long long s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += unsigned(a(r, c)) * v[c];
    out[r] = Residue(s % p);
  }
  return out;
}

/// x·m for x ∈ L in coordinates.
inline Vec act(const rlie::RestrictedModule& m, const Vec& x, const Vec& v) {
  Vec out(m.dim, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) rlie::vec_axpy(m.p, out, x[i], mat_vec(m.action[i], v));
  return out;
}

/// Bracket straight from the structure constants.
inline Vec bracket(const rlie::RestrictedLieAlgebra& l, const Vec& u, const Vec& v) {
  const unsigned p = l.p();
  Vec out(l.dim(), 0);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (u[i] && v[j]) rlie::vec_axpy(p, out, Residue(unsigned(u[i]) * v[j] % p), l.basis_bracket(i, j));
  return out;
}

/// Number of linear maps D: L -> M with D[x,y] = x·D(y) - y·D(x) on basis pairs and,
/// if restricted, D(e^{[p]}) = e^{p-1}·D(e) on the basis. Enumerates every D.
inline std::size_t count_derivations(const rlie::RestrictedLieAlgebra& l, const rlie::RestrictedModule& m,
                                     bool restricted) {
  const unsigned p = l.p();
  const std::size_t n = l.dim(), d = m.dim;
  std::size_t count = 0;
  for_each_vector(p, n * d, [&](const Vec& flat) {
    auto D = [&](const Vec& x) {
      Vec out(d, 0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < d; ++r) out[r] = Residue((out[r] + unsigned(x[j]) * flat[j * d + r]) % p);
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec ei = l.basis_element(i), ej = l.basis_element(j);
        Vec lhs = D(bracket(l, ei, ej));
        Vec rhs = rlie::vec_sub(p, act(m, ei, D(ej)), act(m, ej, D(ei)));
        if (lhs != rhs) return;
      }
    if (restricted)
      for (std::size_t i = 0; i < n; ++i) {
        Vec ei = l.basis_element(i);
        Vec v = D(ei);
        for (unsigned k = 0; k + 1 < p; ++k) v = act(m, ei, v);
        if (D(l.basis_pmap(i)) != v) return;
      }
    ++count;
  });
  return count;
}

/// Dimension of the inner derivations x ↦ x·v, by enumerating v.
inline std::size_t inner_derivation_dim(const rlie::RestrictedLieAlgebra& l, const rlie::RestrictedModule& m) {
  std::set<std::vector<Vec>> maps;
  for_each_vector(m.p, m.dim, [&](const Vec& v) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < l.dim(); ++i) images.push_back(act(m, l.basis_element(i), v));
    maps.insert(images);
  });
  std::size_t count = maps.size(), dim = 0;
  while (count > 1) {
    count /= m.p;
    ++dim;
  }
  return dim;
}

inline std::size_t log_p(unsigned p, std::size_t count) {
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

/// Products in u(L) by rewriting words in the basis letters: adjacent inversions
/// e_j e_i (j > i) become e_i e_j + [e_j, e_i], and p equal adjacent letters become e^{[p]}.
class WordAlgebra {
 public:
  using Word = std::vector<std::size_t>;
  using Element = std::map<Word, unsigned>;

  explicit WordAlgebra(const rlie::RestrictedLieAlgebra& l) : l_(l), p_(l.p()) {}

  Element normal_form(Element x) const {
    Element done;
    while (!x.empty()) {
      auto it = x.begin();
      Word w = it->first;
      unsigned c = it->second;
      x.erase(it);
      if (c == 0) continue;
      std::size_t pos = w.size();
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          pos = i;
          break;
        }
      if (pos < w.size()) {
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        add(x, swapped, c);
        const Vec& br = l_.basis_bracket(w[pos], w[pos + 1]);
        for (std::size_t k = 0; k < br.size(); ++k)
          if (br[k]) {
            Word nw(w.begin(), w.begin() + pos);
            nw.push_back(k);
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            add(x, nw, c * br[k] % p_);
          }
        continue;
      }
      std::size_t run = w.size();
      for (std::size_t i = 0; i + p_ <= w.size(); ++i) {
        bool same = true;
        for (std::size_t k = 1; k < p_; ++k) same = same && w[i + k] == w[i];
        if (same) {
          run = i;
          break;
        }
      }
      if (run < w.size()) {
        const Vec& pm = l_.basis_pmap(w[run]);
        for (std::size_t k = 0; k < pm.size(); ++k)
          if (pm[k]) {
            Word nw(w.begin(), w.begin() + run);
            nw.push_back(k);
            nw.insert(nw.end(), w.begin() + run + p_, w.end());
            add(x, nw, c * pm[k] % p_);
          }
        continue;
      }
      add(done, w, c);
    }
    return done;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        add(out, w, ca * cb % p_);
      }
    return normal_form(out);
  }

  /// x^{[p]} read off from x^p in u(L), where it is the degree-one part.
  Vec p_power(const Vec& x) const {
    Element single;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) single[Word{i}] = x[i];
    Element acc = single;
    for (unsigned k = 1; k < p_; ++k) acc = multiply(acc, single);
    Vec out(l_.dim(), 0);
    for (const auto& [w, c] : acc) {
      if (w.size() != 1) throw std::logic_error("x^p is not of degree one");
      out[w[0]] = Residue(c);
    }
    return out;
  }

  /// The word e_1^{a_1} ... e_n^{a_n}.
  static Word monomial(const std::vector<unsigned>& exps) {
    Word w;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (unsigned k = 0; k < exps[i]; ++k) w.push_back(i);
    return w;
  }

 private:
  void add(Element& x, const Word& w, unsigned c) const {
    if (c % p_ == 0) return;
    unsigned& slot = x[w];
    slot = (slot + c) % p_;
    if (slot == 0) x.erase(w);
  }

  rlie::RestrictedLieAlgebra l_;
  unsigned p_;
};

/// Whether 0 -> I -> Q -> Q/I -> 0 splits, by enumerating every linear complement of I
/// (the graphs of all maps from a fixed complement into I) and testing closure.
/// ideal_basis and complement_basis together form a basis of Q.
inline bool split_by_complements(const rlie::RestrictedLieAlgebra& q, const std::vector<Vec>& ideal_basis,
                                 const std::vector<Vec>& complement_basis, bool restricted) {
  const unsigned p = q.p();
  const WordAlgebra words(q);
  const std::size_t n = q.dim(), k = complement_basis.size(), d = ideal_basis.size();
  bool found = false;
  for_each_vector(p, k * d, [&](const Vec& t) {
    if (found) return;
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < k; ++a) {
      Vec g = complement_basis[a];
      for (std::size_t b = 0; b < d; ++b) rlie::vec_axpy(p, g, t[a * d + b], ideal_basis[b]);
      gens.push_back(g);
    }
    std::set<Vec> elems = span_elements(p, n, gens);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (!elems.count(bracket(q, gens[a], gens[b]))) return;
    if (restricted)
      for (const auto& g : gens)
        if (!elems.count(words.p_power(g))) return;
    found = true;
  });
  return found;
}

}  // namespace oracle
