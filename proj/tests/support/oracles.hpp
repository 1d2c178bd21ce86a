#pragma once

// Slow, independent reference implementations used only by the tests. They
// share the Polynomial and Permutation value types with the library but none
// of its algorithms.

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "qflag/exact_linalg.hpp"
#include "qflag/permutation.hpp"
#include "qflag/polynomial.hpp"

namespace oracle {

using qflag::Integer;
using qflag::Monomial;
using qflag::Permutation;
using qflag::Polynomial;
using Images = std::vector<int>;

inline int inversions(const Images& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j] ? 1 : 0;
  }
  return count;
}

inline Images swap_positions(Images w, int a, int b) {
  std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
  return w;
}

inline Images padded(const Permutation& w, int n) {
  Images out = w.images();
  for (int i = w.size() + 1; i <= n; ++i) out.push_back(i);
  return out;
}

// (P - s_i P) / (x_i - x_{i+1}) by long division in x_i; throws on a
// nonzero remainder.
inline Polynomial divided_difference(int i, const Polynomial& p) {
  const int n = p.rank();
  Polynomial swapped(n);
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    s.set_x(i, m.x(i + 1));
    s.set_x(i + 1, m.x(i));
    swapped.add_term(s, c);
  }
  Polynomial dividend = p - swapped;
  Polynomial quotient(n);
  const Polynomial divisor = Polynomial::x(n, i) - Polynomial::x(n, i + 1);
  while (!dividend.is_zero()) {
    // Highest power of x_i first.
    const Monomial* lead = nullptr;
    Integer lead_c;
    for (const auto& [m, c] : dividend.terms()) {
      if (lead == nullptr || m.x(i) > lead->x(i)) {
        lead = &m;
        lead_c = c;
      }
    }
    if (lead->x(i) == 0) throw std::logic_error("oracle: divided difference left a remainder");
    Monomial qm = *lead;
    qm.set_x(i, lead->x(i) - 1);
    const Polynomial step = Polynomial::term(n, qm, lead_c);
    quotient += step;
    dividend -= step * divisor;
  }
  return quotient;
}

// Every reduced word of w: peel each right descent in turn.
inline std::vector<std::vector<int>> reduced_words(const Images& w) {
  if (inversions(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < static_cast<int>(w.size()); ++i) {
    if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)]) continue;
    for (auto word : reduced_words(swap_positions(w, i, i + 1))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

inline Images compose(const Images& u, const Images& v) {
  Images out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = u[static_cast<std::size_t>(v[i] - 1)];
  return out;
}

// σ_w along every reduced word of w0·w; throws if two words disagree.
inline Polynomial schubert_all_words(const Permutation& w, int n) {
  const Images wi = padded(w, n);
  Images w0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w0[static_cast<std::size_t>(i)] = n - i;
  Polynomial stair(n, 1);
  for (int i = 1; i < n; ++i) stair *= Polynomial::term(n, Monomial::x_var(i, n - i));
  bool first = true;
  Polynomial result(n);
  for (const auto& word : reduced_words(compose(w0, wi))) {
    Polynomial p = stair;
    // w0·w = s_{i1}…s_{ik}; ∂_{i1} acts first.
    for (int letter : word) p = oracle::divided_difference(letter, p);
    if (first) {
      result = p;
      first = false;
    } else if (p != result) {
      throw std::logic_error("oracle: Schubert polynomial depends on the reduced word");
    }
  }
  return result;
}

// Expansion of p in {σ_w : w ∈ S_m} by a dense exact solve per q-monomial.
inline std::map<Permutation, Polynomial> expand_dense(const Polynomial& p, const std::vector<Permutation>& perms,
                                                      const std::vector<Polynomial>& sigmas) {
  std::map<Permutation, Polynomial> out;
  std::vector<Monomial> rows;
  auto row_of = [&](const Monomial& m) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] == m) return r;
    }
    rows.push_back(m);
    return rows.size() - 1;
  };
  for (const auto& s : sigmas) {
    for (const auto& [m, c] : s.terms()) row_of(m);
  }
  // Group p by q part.
  std::vector<std::pair<Monomial, Polynomial>> groups;
  for (const auto& [m, c] : p.terms()) {
    const Monomial qpart = m.q_part();
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == qpart; });
    if (it == groups.end()) {
      groups.emplace_back(qpart, Polynomial(p.rank()));
      it = groups.end() - 1;
    }
    it->second.add_term(m.x_part(), c);
  }
  for (const auto& [qpart, xpoly] : groups) {
    for (const auto& [m, c] : xpoly.terms()) row_of(m);
  }
  for (const auto& [qpart, xpoly] : groups) {
    qflag::RationalMatrix a(rows.size(), sigmas.size());
    qflag::RationalMatrix b(rows.size(), 1);
    for (std::size_t c = 0; c < sigmas.size(); ++c) {
      for (const auto& [m, v] : sigmas[c].terms()) a(row_of(m), c) = qflag::Rational(v);
    }
    for (const auto& [m, v] : xpoly.terms()) b(row_of(m), 0) = qflag::Rational(v);
    const auto x = qflag::solve_exact(a, b);
    for (std::size_t c = 0; c < sigmas.size(); ++c) {
      if (x(c, 0) == 0) continue;
      if (x(c, 0).get_den() != 1) throw std::logic_error("oracle: non-integral expansion");
      auto [it, inserted] = out.try_emplace(perms[c], p.rank());
      it->second.add_term(qpart, x(c, 0).get_num());
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// Monk: terms w·t_ab with a <= p < b <= ambient raising the length by one.
inline std::vector<Images> monk_terms(int p, const Images& w) {
  std::vector<Images> out;
  const int l = inversions(w);
  const int size = static_cast<int>(w.size());
  for (int a = 1; a <= p; ++a) {
    for (int b = p + 1; b <= size; ++b) {
      Images v = swap_positions(w, a, b);
      if (inversions(v) == l + 1) out.push_back(std::move(v));
    }
  }
  return out;
}

// Classical σ_u·σ_v in H*(F(n)) by writing σ_u in monomials and
// multiplying by one x_p at a time, x_p = σ_{s_p} - σ_{s_{p-1}}, with
// Monk's rule in S_{n+1}. Terms outside S_n vanish in H*(F(n)).
inline std::map<Images, Integer> classical_product(const Permutation& u, const Permutation& v, int n) {
  std::map<Images, Integer> result;
  const Polynomial sigma_u = schubert_all_words(u, n);
  for (const auto& [m, c] : sigma_u.terms()) {
    std::map<Images, Integer> partial{{padded(v, n + 1), Integer(1)}};
    for (int p = 1; p <= n; ++p) {
      for (int e = 0; e < m.x(p); ++e) {
        std::map<Images, Integer> next;
        for (const auto& [w, coeff] : partial) {
          for (const auto& t : monk_terms(p, w)) {
            if (t.back() == n + 1) next[t] += coeff;
          }
          if (p >= 2) {
            for (const auto& t : monk_terms(p - 1, w)) {
              if (t.back() == n + 1) next[t] -= coeff;
            }
          }
        }
        partial.clear();
        for (const auto& [w, coeff] : next) {
          if (coeff != 0) partial.emplace(w, coeff);
        }
      }
    }
    for (const auto& [w, coeff] : partial) {
      Images key(w.begin(), w.end() - 1);
      result[key] += coeff * c;
    }
  }
  for (auto it = result.begin(); it != result.end();) it = it->second == 0 ? result.erase(it) : std::next(it);
  return result;
}

// Coefficient of σ_{w0} in σ_u σ_v σ_w, all classical.
inline Integer triple_intersection(const Permutation& u, const Permutation& v, const Permutation& w, int n) {
  Images w0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w0[static_cast<std::size_t>(i)] = n - i;
  Integer total = 0;
  for (const auto& [x, c] : classical_product(u, v, n)) {
    const auto xw = classical_product(Permutation(x), w, n);
    auto it = xw.find(w0);
    if (it != xw.end()) total += c * it->second;
  }
  return total;
}

// Quantum Monk: σ_{s_p} * σ_w = Σ σ_{w t_ab} over a <= p < b with
// l(w t_ab) = l(w) + 1, plus Σ q_a…q_{b-1} σ_{w t_ab} over a <= p < b with
// l(w t_ab) = l(w) - 2(b - a) + 1.
inline std::map<Permutation, Polynomial> quantum_monk(int p, const Permutation& w, int n) {
  std::map<Permutation, Polynomial> out;
  const Images wi = padded(w, n);
  const int l = inversions(wi);
  for (int a = 1; a <= p; ++a) {
    for (int b = p + 1; b <= n; ++b) {
      const Images v = swap_positions(wi, a, b);
      const int lv = inversions(v);
      const bool classical = lv == l + 1;
      const bool quantum = lv == l - 2 * (b - a) + 1;
      if (!classical && !quantum) continue;
      Monomial qm;
      if (quantum) {
        for (int i = a; i < b; ++i) qm.set_q(i, 1);
      }
      auto [it, inserted] = out.try_emplace(Permutation(v), n);
      it->second.add_term(qm, 1);
    }
  }
  return out;
}

}  // namespace oracle
