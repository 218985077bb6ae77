#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghgeo/metric_space.hpp"

namespace ghgeo {

/// (index into X, index into Y)
using IndexPair = std::pair<Index, Index>;

/// A non-empty set of index pairs, kept sorted and duplicate-free.
class Relation {
 public:
  explicit Relation(std::vector<IndexPair> pairs);

  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Every pair of the product {0..n-1} x {0..m-1}.
  static Relation full(std::size_t n, std::size_t m);
  static Relation identity(std::size_t n);
  /// Graph {(i, f[i])} of an index map.
  static Relation graph(std::span<const Index> f);

 private:
  std::vector<IndexPair> pairs_;
};

/// A relation whose projections cover all of X and all of Y.
class Correspondence {
 public:
  /// Throws NotACorrespondence (or IndexOutOfRange) unless left-right-total.
  Correspondence(Relation relation, std::size_t n, std::size_t m);

  const std::vector<IndexPair>& pairs() const noexcept {
    return relation_.pairs();
  }
  const Relation& relation() const noexcept { return relation_; }
  std::size_t size() const noexcept { return relation_.size(); }
  std::size_t x_size() const noexcept { return n_; }
  std::size_t y_size() const noexcept { return m_; }

  /// The same pairs read as a correspondence between Y and X.
  Correspondence transposed() const;

  friend bool operator==(const Correspondence& a, const Correspondence& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.pairs() == b.pairs();
  }

 private:
  Relation relation_;
  std::size_t n_;
  std::size_t m_;
};

struct GHResult {
  double distance = 0.0;
  Correspondence optimal;
  /// distortion of `optimal`; distance == distortion / 2
  double distortion = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::size_t nodes_explored = 0;
  bool certified = false;
};

/// sup | |xx'| - |yy'| | over pairs of related pairs; 0 for a single pair.
double distortion(const Relation& s, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y);

/// Distortion of the graph of f : X -> Y.
double map_distortion(std::span<const Index> f, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y);

bool is_correspondence(const Relation& s, std::size_t n, std::size_t m) noexcept;

inline constexpr std::size_t kMaxEnumerationCells = 25;

/// Streams every correspondence on an n x m grid exactly once, ordered by the
/// characteristic bitmask (bit i*m + j set iff (i, j) is present) read as an
/// unsigned integer. Throws TooLarge when n*m exceeds kMaxEnumerationCells.
class CorrespondenceEnumerator {
 public:
  CorrespondenceEnumerator(std::size_t n, std::size_t m);

  /// Advances to the next correspondence; false once exhausted.
  bool advance() noexcept;
  /// Bitmask of the current correspondence (valid after advance() == true).
  std::uint32_t mask() const noexcept { return mask_; }
  Correspondence current() const;
  std::optional<Correspondence> next();

  std::size_t x_size() const noexcept { return n_; }
  std::size_t y_size() const noexcept { return m_; }

 private:
  bool covers(std::uint32_t mask) const noexcept;

  std::size_t n_;
  std::size_t m_;
  std::uint32_t row_mask_;
  std::uint64_t end_;
  std::uint64_t cursor_ = 0;
  std::uint32_t mask_ = 0;
};

std::uint64_t count_correspondences(std::size_t n, std::size_t m);

/// Exhaustive minimisation of distortion over all correspondences; the first
/// minimiser in enumeration order is reported. Certified by construction.
GHResult gh_brute(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Branch-and-bound over partner sets. Exact when the search finishes within
/// `budget` nodes; otherwise returns the best correspondence found with
/// certified = false and bounds bracketing the optimum.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  std::size_t budget = kDefaultBudget);

/// |diam X - diam Y| / 2
double gh_lower_bound(const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) noexcept;

/// distortion(s) / 2
double gh_upper_bound_from(const Correspondence& s, const FiniteMetricSpace& x,
                           const FiniteMetricSpace& y);

}  // namespace ghgeo
