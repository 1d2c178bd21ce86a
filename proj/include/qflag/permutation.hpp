#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

/// A reduced (or arbitrary) word i1..il standing for s_{i1}·…·s_{il}.
using Word = std::vector<int>;

/// Element of S_n in one-line notation. Values and positions are 1-based in
/// every public accessor.
///
/// Composition follows (u·v)(i) = u(v(i)), so right multiplication by the
/// adjacent transposition s_i swaps the entries in positions i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// Product s_{i1}·…·s_{il} in S_n.
  static Permutation from_word(std::span<const int> word, int n);
  /// Parses space-separated one-line notation such as "3 1 2".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  int length() const;
  bool is_identity() const;
  Permutation inverse() const;
  /// w·s_i, i.e. positions i and i+1 swapped.
  Permutation times_adjacent(int i) const;
  /// w·t_{ij}, i.e. positions i and j swapped.
  Permutation times_transposition(int i, int j) const;
  /// The image of w under S_n ⊂ S_m (fixes n+1..m).
  Permutation embed(int m) const;
  /// Smallest m such that w lies in the image of S_m.
  int support() const;
  /// Drops trailing fixed points beyond m; throws if w moves any of them.
  Permutation restrict(int m) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation adjacent_transposition(int i, int n);
Permutation transposition(int i, int j, int n);

int length(const Permutation& w);

/// card{ i <= q : w(i) <= p }.
int rank_function(const Permutation& w, int q, int p);

/// One reduced word of w; its letters multiply left to right to w.
Word reduced_word(const Permutation& w);

inline constexpr int kDefaultReducedWordBound = 10;

/// Every reduced word of w, sorted lexicographically. Throws
/// std::length_error when length(w) exceeds `max_length`.
std::vector<Word> all_reduced_words(const Permutation& w,
                                    int max_length = kDefaultReducedWordBound);

/// The Grassmannian cycle in S_n whose Schubert polynomial is
/// e_{k-1}(x_1..x_{m-1}): fixes 1..m-k, sends m-k+1..m-1 to m-k+2..m,
/// sends m to m-k+1 and fixes m+1..n. Requires 1 <= k <= m <= n.
Permutation alpha(int k, int m, int n);

/// alpha(k-1, n, n+1) · t_{n-1,n+1} in S_{n+1}. Requires 2 <= k <= n.
Permutation beta(int k, int n);

/// All elements of S_n in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace qflag
