#ifndef MODKALT_PERM_HPP
#define MODKALT_PERM_HPP

#include <string>
#include <vector>

namespace modkalt {

/// Permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are 1-based everywhere in the public interface.
class Perm {
 public:
  /// Validates that `word` is a bijection of {1, ..., n}.
  explicit Perm(std::vector<int> word);

  static Perm identity(int n);

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at 1-based position i.
  int at(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  friend bool operator==(const Perm& a, const Perm& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.word_ < b.word_; }

 private:
  std::vector<int> word_;
};

/// Number of excedances: positions i with pi_i > i.
int exc(const Perm& p);

/// Number of inversions, by merge counting in O(n log n).
long long inv(const Perm& p);

/// (-1)^inv: +1 for even permutations, -1 for odd.
int sgn(const Perm& p);

/// Number of descents: positions i < n with pi_i > pi_{i+1}.
int des(const Perm& p);

/// Sorted positions i with pi_i = i; empty iff p is a derangement.
std::vector<int> fixed_points(const Perm& p);

bool is_derangement(const Perm& p);

/// Composition (a . b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);

Perm inverse(const Perm& p);

/// One-line text: digits without separators for n <= 9 ("45312"),
/// comma-separated otherwise ("4,5,3,1,2").
std::string to_string(const Perm& p);

/// Accepts both of the to_string forms.
Perm parse_perm(const std::string& text);

}  // namespace modkalt

#endif  // MODKALT_PERM_HPP
