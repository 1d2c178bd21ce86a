#include "qflag/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

void require_index(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_word(std::span<const int> word, int n) {
  Permutation w = identity(n);
  for (int i : word) w = w.times_adjacent(i);
  return w;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("invalid permutation entry '" + std::string(token) + "'");
    }
    images.push_back(value);
    pos = end;
  }
  if (images.empty()) throw std::invalid_argument("empty permutation");
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation entry '" + std::to_string(v) + "' is outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("permutation entry '" + std::to_string(v) + "' is repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(images));
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inversions;
    }
  }
  return inversions;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  }
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::times_adjacent(int i) const {
  return times_transposition(i, i + 1);
}

Permutation Permutation::times_transposition(int i, int j) const {
  require_index(1 <= i && i < j && j <= size(), "transposition index out of range");
  Permutation result = *this;
  std::swap(result.images_[static_cast<std::size_t>(i - 1)],
            result.images_[static_cast<std::size_t>(j - 1)]);
  return result;
}

Permutation Permutation::embed(int m) const {
  if (m < size()) throw std::invalid_argument("cannot embed S_n into a smaller S_m");
  Permutation result = *this;
  for (int i = size() + 1; i <= m; ++i) result.images_.push_back(i);
  return result;
}

int Permutation::support() const {
  int m = size();
  while (m > 0 && images_[static_cast<std::size_t>(m - 1)] == m) --m;
  return m;
}

Permutation Permutation::restrict(int m) const {
  if (m > size()) return embed(m);
  if (support() > m) {
    throw std::invalid_argument("permutation " + to_string() + " does not lie in S_" +
                                std::to_string(m));
  }
  Permutation result;
  result.images_.assign(images_.begin(), images_.begin() + m);
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  const Permutation a = u.embed(n);
  const Permutation b = v.embed(n);
  Permutation result;
  result.images_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) result.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
  return result;
}

Permutation adjacent_transposition(int i, int n) {
  require_index(1 <= i && i < n, "adjacent transposition index out of range");
  return Permutation::identity(n).times_adjacent(i);
}

Permutation transposition(int i, int j, int n) {
  require_index(1 <= i && i < j && j <= n, "transposition index out of range");
  return Permutation::identity(n).times_transposition(i, j);
}

int length(const Permutation& w) { return w.length(); }

int rank_function(const Permutation& w, int q, int p) {
  const int n = w.size();
  require_index(1 <= q && q <= n && 1 <= p && p <= n, "rank function index out of range");
  int count = 0;
  for (int i = 1; i <= q; ++i) {
    if (w(i) <= p) ++count;
  }
  return count;
}

Word reduced_word(const Permutation& w) {
  // Peel off right descents: w = (w·s_i)·s_i with l(w·s_i) = l(w) - 1.
  Word reversed;
  Permutation current = w;
  while (true) {
    int descent = 0;
    for (int i = 1; i < current.size(); ++i) {
      if (current(i) > current(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back(descent);
    current = current.times_adjacent(descent);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

std::vector<Word> all_reduced_words(const Permutation& w, int max_length) {
  const int len = w.length();
  if (len > max_length) {
    throw std::length_error("permutation length " + std::to_string(len) +
                            " exceeds the reduced-word bound " + std::to_string(max_length));
  }
  std::vector<Word> words;
  Word suffix;
  std::function<void(const Permutation&)> recurse = [&](const Permutation& current) {
    bool any = false;
    for (int i = 1; i < current.size(); ++i) {
      if (current(i) > current(i + 1)) {
        any = true;
        suffix.push_back(i);
        recurse(current.times_adjacent(i));
        suffix.pop_back();
      }
    }
    if (!any) words.emplace_back(suffix.rbegin(), suffix.rend());
  };
  recurse(w);
  std::sort(words.begin(), words.end());
  return words;
}

Permutation alpha(int k, int m, int n) {
  if (!(1 <= k && k <= m && m <= n)) {
    throw std::invalid_argument("alpha(k, m, n) requires 1 <= k <= m <= n");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int i = m - k + 1; i <= m - 1; ++i) images[static_cast<std::size_t>(i - 1)] = i + 1;
  images[static_cast<std::size_t>(m - 1)] = m - k + 1;
  return Permutation(std::move(images));
}

Permutation beta(int k, int n) {
  if (!(2 <= k && k <= n)) throw std::invalid_argument("beta(k, n) requires 2 <= k <= n");
  return alpha(k - 1, n, n + 1) * transposition(n - 1, n + 1, n + 1);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace qflag
