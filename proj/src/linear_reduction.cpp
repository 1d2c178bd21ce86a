#include "qflag/linear_reduction.hpp"

#include <stdexcept>

#include "qflag/rewriting.hpp"
#include "qflag/schubert.hpp"

namespace qflag {

bool is_standard_monomial(const Monomial& m, int n) {
  for (int j = 1; j <= n; ++j) {
    if (m.x(j) > n - j) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_weighted_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m;
  // Variables 1..n are x_1..x_n (weight 1), n+1..2n-1 are q_1..q_{n-1}.
  const int vars = 2 * n - 1;
  auto rec = [&](auto&& self, int v, int remaining) -> void {
    if (v > vars) {
      if (remaining == 0) out.push_back(m);
      return;
    }
    const bool is_x = v <= n;
    const int weight = is_x ? 1 : 2;
    for (int e = 0; e * weight <= remaining; ++e) {
      if (is_x) {
        m.set_x(v, e);
      } else {
        m.set_q(v - n, e);
      }
      self(self, v + 1, remaining - e * weight);
    }
    if (is_x) {
      m.set_x(v, 0);
    } else {
      m.set_q(v - n, 0);
    }
  };
  rec(rec, 1, d);
  return out;
}

using SparseRow = std::map<std::size_t, Rational>;

struct GradedLinearReducer::Degree {
  std::map<Monomial, std::size_t, ReductionOrder> column;
  std::vector<Monomial> monomial;
  std::size_t nonstandard = 0;
  // Pivot column → row whose smallest column is that pivot, pivot entry 1.
  std::map<std::size_t, SparseRow> pivots;
};

GradedLinearReducer::GradedLinearReducer(int n, std::vector<Polynomial> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.rank() != n_) throw std::invalid_argument("GradedLinearReducer: generator rank mismatch");
    if (!g.is_homogeneous()) throw std::invalid_argument("GradedLinearReducer: generators must be homogeneous");
  }
}

GradedLinearReducer::~GradedLinearReducer() = default;

std::unique_ptr<GradedLinearReducer::Degree> GradedLinearReducer::build(int d) const {
  auto deg = std::make_unique<Degree>();
  std::vector<Monomial> standard;
  for (const auto& m : monomials_of_weighted_degree(n_, d)) {
    if (is_standard_monomial(m, n_)) {
      standard.push_back(m);
    } else {
      deg->monomial.push_back(m);
    }
  }
  deg->nonstandard = deg->monomial.size();
  deg->monomial.insert(deg->monomial.end(), standard.begin(), standard.end());
  for (std::size_t i = 0; i < deg->monomial.size(); ++i) deg->column.emplace(deg->monomial[i], i);

  for (const auto& g : generators_) {
    if (deg->pivots.size() == deg->nonstandard) break;
    const int gd = g.weighted_degree();
    if (gd > d) continue;
    for (const auto& shift : monomials_of_weighted_degree(n_, d - gd)) {
      if (deg->pivots.size() == deg->nonstandard) break;
      SparseRow row;
      for (const auto& [m, c] : g.terms()) row[deg->column.at(m * shift)] += Rational(c);
      while (!row.empty()) {
        auto it = deg->pivots.find(row.begin()->first);
        if (it == deg->pivots.end()) break;
        const Rational factor = row.begin()->second;
        for (const auto& [col, v] : it->second) {
          Rational& slot = row[col];
          slot -= factor * v;
          if (slot == 0) row.erase(col);
        }
      }
      if (row.empty()) continue;
      if (row.begin()->first >= deg->nonstandard) {
        throw ConsistencyError("linear reduction: the ideal contains a combination of standard monomials");
      }
      const Rational inv = 1 / row.begin()->second;
      for (auto& [col, v] : row) v *= inv;
      deg->pivots.emplace(row.begin()->first, std::move(row));
    }
  }
  if (deg->pivots.size() != deg->nonstandard) {
    throw ConsistencyError("linear reduction: non-standard monomials remain independent in degree " +
                           std::to_string(d));
  }
  return deg;
}

const GradedLinearReducer::Degree& GradedLinearReducer::degree(int d) const {
  std::lock_guard lock(mutex_);
  auto it = degrees_.find(d);
  if (it == degrees_.end()) it = degrees_.emplace(d, build(d)).first;
  return *it->second;
}

Polynomial GradedLinearReducer::normal_form(const Polynomial& p) const {
  if (p.rank() != n_) throw std::invalid_argument("linear normal form: rank mismatch");
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(m.weighted_degree(), n_);
    it->second.add_term(m, c);
  }
  Polynomial result(n_);
  for (const auto& [d, part] : parts) {
    const Degree& deg = degree(d);
    SparseRow target;
    for (const auto& [m, c] : part.terms()) target[deg.column.at(m)] += Rational(c);
    while (!target.empty() && target.begin()->first < deg.nonstandard) {
      const Rational factor = target.begin()->second;
      for (const auto& [col, v] : deg.pivots.at(target.begin()->first)) {
        Rational& slot = target[col];
        slot -= factor * v;
        if (slot == 0) target.erase(col);
      }
    }
    for (const auto& [col, v] : target) {
      if (v.get_den() != 1) throw ConsistencyError("linear reduction produced a non-integral coefficient");
      result.add_term(deg.monomial[col], v.get_num());
    }
  }
  return result;
}

}  // namespace qflag
