#ifndef WMOD_MULTI_INDEX_HPP
#define WMOD_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wmod {

/// Exponent tuple k in Z_{>=0}^n indexing a basis vector.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& k);

/// Graded lexicographic order: by total degree, then first differing entry larger first.
/// Yields (0,0),(1,0),(0,1),(2,0),(1,1),(0,2) for n=2.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

std::string to_string(const MultiIndex& k);

MultiIndex parse_multi_index(const std::string& s, int n);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& k) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ k.size();
    for (int v : k) h = (h * 0x100000001b3ull) ^ static_cast<std::size_t>(v + 1);
    return h;
  }
};

/// Truncated basis {k : |k| <= N} enumerated in graded lex order, with O(1) label->position lookup.
class BasisWindow {
 public:
  BasisWindow(int n, int N);

  int n() const { return n_; }
  int N() const { return N_; }
  int size() const { return static_cast<int>(labels_.size()); }

  const MultiIndex& label(int pos) const { return labels_[pos]; }
  const std::vector<MultiIndex>& labels() const { return labels_; }

  /// -1 when k is outside the window.
  int position(const MultiIndex& k) const;

  bool contains(const MultiIndex& k) const { return position(k) >= 0; }

  /// Number of labels with |k| == d.
  int level_dimension(int d) const;
  /// Number of labels with |k| <= d.
  int cumulative_dimension(int d) const;

 private:
  int n_, N_;
  std::vector<MultiIndex> labels_;
  std::unordered_map<MultiIndex, int, MultiIndexHash> position_;
};

/// binom(a, b) as double (exact for the sizes used in window bookkeeping).
double binomial(int a, int b);

}  // namespace wmod

#endif
