#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ghgeo {

using Index = std::size_t;
using IndexSet = std::vector<Index>;
using Matrix = std::vector<std::vector<double>>;

/// Controls how strictly the triangle inequality is enforced.
///
/// Matrices supplied by a user are checked exactly (tolerance 0). Matrices the
/// library computes itself (blends, samplers) carry a few ulps of rounding, so
/// they are checked with a relative slack: d(i,j) may exceed d(i,k) + d(k,j)
/// by at most `triangle_tolerance * (d(i,k) + d(k,j))`.
struct ValidationOptions {
  double triangle_tolerance = 0.0;
};

inline constexpr ValidationOptions kExact{};
inline constexpr ValidationOptions kComputed{
    8.0 * std::numeric_limits<double>::epsilon()};

/// A labeled finite metric space stored as a dense row-major distance matrix.
///
/// Instances only come out of validate_metric() or constructed(); both
/// guarantee a zero diagonal, symmetry, strictly positive off-diagonal entries
/// and distinct labels. Immutable after construction.
class FiniteMetricSpace {
 public:
  /// Builds a space from a matrix the caller has produced by a construction
  /// that is a metric mathematically (half-sums, blends of metrics). Checks
  /// everything except the O(n^3) triangle inequality.
  static FiniteMetricSpace constructed(std::vector<std::string> labels,
                                       std::vector<double> row_major);

  std::size_t size() const noexcept { return labels_.size(); }
  double operator()(Index i, Index j) const noexcept {
    return dist_[i * labels_.size() + j];
  }
  std::span<const double> row(Index i) const noexcept {
    return {dist_.data() + i * size(), size()};
  }
  std::span<const double> data() const noexcept { return dist_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  Matrix matrix() const;

 private:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> d)
      : labels_(std::move(labels)), dist_(std::move(d)) {}

  friend FiniteMetricSpace validate_metric(const Matrix&,
                                           std::vector<std::string>,
                                           ValidationOptions);

  std::vector<std::string> labels_;
  std::vector<double> dist_;
};

/// Distance matrix in which distinct points may sit at distance zero.
class SemiMetricMatrix {
 public:
  std::size_t size() const noexcept { return n_; }
  double operator()(Index i, Index j) const noexcept { return dist_[i * n_ + j]; }
  std::span<const double> data() const noexcept { return dist_; }
  Matrix matrix() const;

 private:
  SemiMetricMatrix(std::size_t n, std::vector<double> d)
      : n_(n), dist_(std::move(d)) {}

  friend SemiMetricMatrix validate_semi_metric(std::size_t,
                                               std::vector<double>,
                                               ValidationOptions);

  std::size_t n_ = 0;
  std::vector<double> dist_;
};

/// An ε-net S of a space: every point lies strictly within `epsilon` of S.
struct NetReport {
  IndexSet net;
  double epsilon = 0.0;
  /// max over points of the distance to the nearest net point; < epsilon.
  double radius = 0.0;

  std::size_t size() const noexcept { return net.size(); }
};

/// Checks all metric axioms and returns the space, or throws ghgeo::Error
/// naming the first violated axiom with witness indices. Axioms are checked
/// in the order: finiteness, non-negativity, zero diagonal, symmetry,
/// positivity off the diagonal, triangle inequality. The triangle witness
/// (i, j, k) means d(i,j) > d(i,k) + d(k,j).
FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels,
                                  ValidationOptions options = kExact);

/// Convenience overload labelling the points "0", "1", ...
FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  ValidationOptions options = kExact);

SemiMetricMatrix validate_semi_metric(const Matrix& matrix,
                                      ValidationOptions options = kExact);
SemiMetricMatrix validate_semi_metric(std::size_t n,
                                      std::vector<double> row_major,
                                      ValidationOptions options = kExact);

double diameter(const FiniteMetricSpace& x) noexcept;

/// Largest distance from point i to any other point.
double eccentricity(const FiniteMetricSpace& x, Index i) noexcept;

/// d(B, A): the largest distance from a point of B to the set A.
double directed_distance(const FiniteMetricSpace& x, const IndexSet& a,
                         const IndexSet& b);

double hausdorff(const FiniteMetricSpace& x, const IndexSet& a,
                 const IndexSet& b);

/// Greedy farthest-point sampling seeded at index 0; keeps adding the point
/// farthest from the current net (ties to the lowest index) while that
/// distance is >= epsilon. Stops early once `max_points` are chosen, in which
/// case the returned radius may be >= epsilon.
struct GreedySample {
  IndexSet points;
  double radius = 0.0;
};
GreedySample farthest_point_sample(const FiniteMetricSpace& x, double epsilon,
                                   std::size_t max_points);

NetReport epsilon_net(const FiniteMetricSpace& x, double epsilon);

/// Given an ε-net `s` of `x`, builds a (2ε)-net of the subset `y` with at most
/// |s| points: each net point that has some member of `y` strictly within ε
/// contributes its nearest such member (ties to the lowest index).
NetReport project_net(const FiniteMetricSpace& x, const IndexSet& s,
                      const IndexSet& y, double epsilon);

/// Merges points at distance zero. Classes are ordered by their smallest
/// member index; each class keeps its lexicographically least label.
FiniteMetricSpace quotient_zero_classes(const SemiMetricMatrix& m,
                                        const std::vector<std::string>& labels);

/// Induced subspace on the given indices, in the given order.
FiniteMetricSpace subspace(const FiniteMetricSpace& x, const IndexSet& points);

struct IsometryResult {
  bool isometric = false;
  /// When isometric: permutation[i] is the point of Y matched to point i of X.
  std::vector<Index> permutation;
  /// When not isometric: short reason ("size", "distance multiset", "search").
  std::string refutation;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultIsometryBudget = 10'000'000;

/// Exact (entry-wise equal) isometry test by pruned backtracking. Throws
/// BudgetExceeded if the search needs more than `budget` nodes.
IsometryResult is_isometric(const FiniteMetricSpace& x,
                            const FiniteMetricSpace& y,
                            std::size_t budget = kDefaultIsometryBudget);

}  // namespace ghgeo
