#include "qflag/flag_ring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qflag/exact_linalg.hpp"

namespace qflag {

namespace {

constexpr int kMaxRingRank = 6;

void require_ring_rank(int n) {
  if (n < 1 || n > kMaxRingRank) {
    throw std::invalid_argument("flag ring rank must lie in 1.." + std::to_string(kMaxRingRank) + ", got " +
                                std::to_string(n));
  }
}

std::vector<Monomial> standard_monomials(int n) {
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= n - j; ++e) {
      m.set_x(j, e);
      self(self, j + 1);
    }
    m.set_x(j, 0);
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), DisplayOrder{});
  return out;
}

std::optional<RewritingSystem> read_cache(const std::filesystem::path& file, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return std::nullopt;
  return RewritingSystem::from_json(j, n);
}

void write_cache(const std::filesystem::path& dir, const std::filesystem::path& file, const RewritingSystem& rs) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  // Write then rename so a concurrent reader never sees half a file.
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << rs.to_json().dump(1) << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

Polynomial product_of_classes(const FlagRing& ring, std::span<const Permutation> ws) {
  Polynomial acc(ring.n(), 1);
  for (const auto& w : ws) acc = ring.normal_form(acc * ring.quantum_class(w));
  return acc;
}

}  // namespace

Multidegree::Multidegree(std::vector<int> d) : d_(std::move(d)) {
  for (int v : d_) {
    if (v < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
  }
}

Multidegree Multidegree::zero(int n) { return Multidegree(std::vector<int>(static_cast<std::size_t>(std::max(n - 1, 0)), 0)); }

Multidegree Multidegree::parse(std::string_view text) {
  std::vector<int> d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ',' && text[end] != '\t') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, err] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (err != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw std::invalid_argument("bad multidegree entry '" + std::string(token) + "'");
    }
    d.push_back(value);
    pos = end;
  }
  return Multidegree(std::move(d));
}

int Multidegree::total() const { return std::accumulate(d_.begin(), d_.end(), 0); }

int Multidegree::expected_dimension() const {
  const int n = size() + 1;
  return n * (n - 1) / 2 + 2 * total();
}

Monomial Multidegree::q_monomial() const {
  Monomial m;
  for (int i = 0; i < size(); ++i) m.set_q(i + 1, d_[static_cast<std::size_t>(i)]);
  return m;
}

std::string Multidegree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(d_[i]);
  }
  return out;
}

std::vector<Multidegree> multidegrees_up_to(int n, int max_total) {
  std::vector<Multidegree> out;
  std::vector<int> d(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == d.size()) {
      out.emplace_back(d);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      d[i] = v;
      self(self, i + 1, remaining - v);
    }
    d[i] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

FlagRing::FlagRing(int n, std::vector<Polynomial> generators, RewritingSystem rewriting, bool cached)
    : n_(n),
      generators_(std::move(generators)),
      standard_basis_(standard_monomials(n)),
      rewriting_(std::move(rewriting)),
      linear_(std::make_unique<GradedLinearReducer>(n, generators_)),
      loaded_from_cache_(cached) {
  // The leading monomials must be x_{n-k+1}^k, otherwise the standard
  // monomials would not be the irreducible ones.
  std::vector<Monomial> expected;
  for (int k = 1; k <= n_; ++k) expected.push_back(Monomial::x_var(n_ - k + 1, k));
  auto leads = rewriting_.leading_monomials();
  const auto by_order = [](const Monomial& a, const Monomial& b) { return DisplayOrder{}(a, b); };
  std::sort(expected.begin(), expected.end(), by_order);
  std::sort(leads.begin(), leads.end(), by_order);
  if (leads != expected) throw ConsistencyError("rewriting system has unexpected leading monomials");
  std::size_t factorial = 1;
  for (int i = 2; i <= n_; ++i) factorial *= static_cast<std::size_t>(i);
  if (standard_basis_.size() != factorial) throw ConsistencyError("standard basis does not have n! elements");
  for (const auto& g : generators_) {
    if (!rewriting_.reduce(g).is_zero()) throw ConsistencyError("generator does not reduce to zero");
  }
}

std::shared_ptr<const FlagRing> FlagRing::build(int n, const std::optional<std::filesystem::path>& cache_dir) {
  require_ring_rank(n);
  std::vector<Polynomial> generators = quantum_relations(n, RelationMethod::kRecursion);

  std::optional<std::filesystem::path> file;
  if (cache_dir) file = *cache_dir / ("rewriting-n" + std::to_string(n) + ".json");
  if (file) {
    if (auto cached = read_cache(*file, n)) {
      try {
        return std::shared_ptr<const FlagRing>(new FlagRing(n, generators, std::move(*cached), true));
      } catch (const ConsistencyError&) {
        // A cache that does not describe this ideal is treated as stale.
      }
    }
  }
  RewritingSystem rs = RewritingSystem::complete(generators);
  if (file) write_cache(*cache_dir, *file, rs);
  return std::shared_ptr<const FlagRing>(new FlagRing(n, std::move(generators), std::move(rs), false));
}

Polynomial FlagRing::normal_form(const Polynomial& p) const { return rewriting_.reduce(p.with_rank(n_)); }

Polynomial FlagRing::normal_form_linear(const Polynomial& p) const { return linear_->normal_form(p.with_rank(n_)); }

Permutation FlagRing::in_ring(const Permutation& w) const {
  if (w.support() > n_) {
    throw std::invalid_argument("permutation " + w.to_string() + " does not lie in S_" + std::to_string(n_));
  }
  return w.size() == n_ ? w : (w.size() < n_ ? w.embed(n_) : w.restrict(n_));
}

void FlagRing::compute_quantum_classes() const {
  const int n = n_;
  // Exponent tuples (i_1..i_{n-1}) with i_j <= j, grouped by Σ i_j.
  std::map<int, std::vector<std::vector<int>>> tuples;
  std::vector<int> t(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == t.size()) {
      tuples[std::accumulate(t.begin(), t.end(), 0)].push_back(t);
      return;
    }
    for (int e = 0; e <= static_cast<int>(j) + 1; ++e) {
      t[j] = e;
      self(self, j + 1);
    }
    t[j] = 0;
  };
  rec(rec, 0);

  auto elementary_product = [&](const std::vector<int>& tuple, bool quantum) {
    Polynomial p(n, 1);
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      const int vars = static_cast<int>(j) + 1;
      p *= quantum ? quantum_relation_recursive(tuple[j], vars, n) : elementary_symmetric(tuple[j], vars, n);
    }
    return p;
  };

  const SchubertTable& table = schubert_table(n);
  for (const auto& [degree, ts] : tuples) {
    const auto& perms = table.of_length(degree);
    // Rows: standard monomials of this degree; columns: elementary products.
    std::vector<Monomial> rows;
    for (const auto& m : standard_basis_) {
      if (m.x_degree() == degree) rows.push_back(m);
    }
    if (rows.size() != ts.size()) throw ConsistencyError("elementary monomials do not match the standard basis");
    RationalMatrix a(rows.size(), ts.size());
    for (std::size_t c = 0; c < ts.size(); ++c) {
      const Polynomial e = elementary_product(ts[c], false);
      for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = Rational(e.coefficient(rows[r]));
    }
    RationalMatrix b(rows.size(), perms.size());
    for (std::size_t c = 0; c < perms.size(); ++c) {
      const Polynomial& sigma = table.polynomial(perms[c]);
      std::size_t matched = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        b(r, c) = Rational(sigma.coefficient(rows[r]));
        if (b(r, c) != 0) ++matched;
      }
      if (matched != sigma.size()) throw ConsistencyError("Schubert polynomial leaves the standard monomials");
    }
    RationalMatrix coeffs;
    try {
      coeffs = solve_exact(a, b);
    } catch (const std::domain_error& e) {
      throw ConsistencyError(std::string("elementary expansion failed: ") + e.what());
    }
    std::vector<Polynomial> quantized;
    for (const auto& tuple : ts) quantized.push_back(elementary_product(tuple, true));
    for (std::size_t c = 0; c < perms.size(); ++c) {
      Polynomial q(n);
      for (std::size_t r = 0; r < ts.size(); ++r) {
        const Rational& v = coeffs(r, c);
        if (v == 0) continue;
        if (v.get_den() != 1) throw ConsistencyError("non-integral elementary expansion");
        q += quantized[r] * Integer(v.get_num());
      }
      quantum_classes_.emplace(perms[c], normal_form(q));
    }
  }
}

const Polynomial& FlagRing::quantum_class(const Permutation& w) const {
  std::call_once(classes_once_, [this] { compute_quantum_classes(); });
  return quantum_classes_.at(in_ring(w));
}

SchubertExpansion FlagRing::expand(const Polynomial& p) const {
  Polynomial rest = normal_form(p);
  SchubertExpansion out(n_, n_);
  // Each quantum class is σ_w plus terms of lower x-degree, so peeling off
  // the top x-degree classically terminates.
  while (!rest.is_zero()) {
    const int top = rest.x_degree();
    const SchubertExpansion slice = expand_in_schubert_basis(rest.x_homogeneous_part(top), n_);
    for (const auto& [w, c] : slice.terms()) {
      out.add(w, c);
      rest -= c * quantum_class(w);
    }
    if (!rest.is_zero() && rest.x_degree() >= top) throw ConsistencyError("quantum expansion did not descend");
  }
  return out;
}

Polynomial FlagRing::from_expansion(const SchubertExpansion& e) const {
  Polynomial p(n_);
  for (const auto& [w, c] : e.terms()) p += c.with_rank(n_) * quantum_class(w);
  return p;
}

SchubertExpansion FlagRing::quantum_product(const Permutation& u, const Permutation& v) const {
  return expand(quantum_class(u) * quantum_class(v));
}

SchubertExpansion FlagRing::multiply(const SchubertExpansion& a, const SchubertExpansion& b) const {
  return expand(from_expansion(a) * from_expansion(b));
}

Integer FlagRing::gromov_witten(std::span<const Permutation> ws, const Multidegree& d) const {
  if (ws.size() < 2) throw std::invalid_argument("Gromov-Witten invariants need at least two classes");
  if (d.size() != n_ - 1) {
    throw std::invalid_argument("multidegree must have " + std::to_string(n_ - 1) + " entries");
  }
  std::vector<Permutation> classes;
  int total_length = 0;
  for (const auto& w : ws) {
    classes.push_back(in_ring(w));
    total_length += classes.back().length();
  }
  if (total_length != d.expected_dimension()) return 0;
  // The only class whose normal form contains q^d·x^staircase is q^d σ_{w0}.
  const Polynomial product = product_of_classes(*this, classes);
  return product.coefficient(d.q_monomial() * staircase(n_).terms().begin()->first);
}

std::optional<std::filesystem::path> default_cache_dir() {
  const char* dir = std::getenv("QFLAG_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

const FlagRing& flag_ring(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FlagRing>> rings;
  std::lock_guard lock(mutex);
  auto it = rings.find(n);
  if (it == rings.end()) it = rings.emplace(n, FlagRing::build(n, default_cache_dir())).first;
  return *it->second;
}

Integer classical_intersection_number(std::span<const Permutation> ws, int n) {
  const FlagRing& ring = flag_ring(n);
  Polynomial product(n, 1);
  for (const auto& w : ws) product = ring.normal_form(product * schubert_polynomial(ring.in_ring(w), n));
  return substitute_q_zero(product).coefficient(staircase(n).terms().begin()->first);
}

}  // namespace qflag
