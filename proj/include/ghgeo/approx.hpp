#pragma once

#include <string>
#include <vector>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/geodesic.hpp"
#include "ghgeo/metric_space.hpp"

namespace ghgeo {

enum class SampleKind { Circle, Interval, Euclidean };

std::string to_string(SampleKind kind);
SampleKind parse_sample_kind(const std::string& name);

/// A finite sample of a classical compact space.
struct SampledSpace {
  SampleKind kind;
  std::size_t resolution = 0;
  /// Spacing between neighbouring samples along the underlying continuum;
  /// 0 for explicit point sets, which are the space themselves.
  double mesh = 0.0;
  FiniteMetricSpace space;
};

/// k evenly spaced samples: angles 2*pi*i/k on the unit circle with the
/// arc-length metric, or points i*L/(k-1) on [0, L]. `length` is ignored for
/// the circle. Throws BadResolution for k = 0 (and for Euclidean, which needs
/// sample_points()).
SampledSpace sample_space(SampleKind kind, std::size_t k, double length = 1.0);

/// Explicit Euclidean point set; all points must have the same dimension.
SampledSpace sample_points(const std::vector<std::vector<double>>& coordinates);

/// Greedy 1/n-net of the sample. Throws TooCoarse unless mesh < 1/(2n).
NetReport net_sequence(const SampledSpace& s, std::size_t n);

inline constexpr std::size_t kMaxProductPoints = 10'000;

/// X x Y with |(x,y)(x',y')| = (|xx'| + |yy'|) / 2. Pair (i, j) sits at index
/// i * |Y| + j.
FiniteMetricSpace product_half_sum(const FiniteMetricSpace& xn,
                                   const FiniteMetricSpace& yn);

/// One ε-level check that R_n carries a small (2ε)-net.
struct NetCheck {
  double epsilon = 0.0;
  /// max of the greedy ε-net sizes of X_n and Y_n
  std::size_t n_eps = 0;
  /// size of the product of the two ε-nets (<= n_eps^2)
  std::size_t product_net_size = 0;
  /// size and radius of the (2ε)-net projected into R_n
  std::size_t projected_size = 0;
  double projected_radius = 0.0;
  bool passed = false;
};

struct MidpointStep {
  std::size_t n = 0;
  /// sample indices of the nets X_n and Y_n
  IndexSet x_net;
  IndexSet y_net;
  double x_net_radius = 0.0;
  double y_net_radius = 0.0;
  /// false when the size cap stopped the greedy net before radius < 1/n
  bool x_is_net = false;
  bool y_is_net = false;
  GeodesicSpec spec;
  FiniteMetricSpace midpoint;
  double bound_d = 0.0;
  double midpoint_diameter = 0.0;
  double half_sum_diameter = 0.0;
  /// diam R_n <= (diam X_n + diam Y_n)/2 <= D
  bool diameter_ok = false;
  /// the product metric restricted to R_n equals the midpoint metric
  bool restriction_ok = false;
  std::vector<NetCheck> net_checks;
  SandwichReport to_x;
  SandwichReport to_y;
  bool midpoint_certified = false;

  bool passed() const;
};

struct MidpointSequenceOptions {
  std::size_t max_net_size = 7;
  std::vector<double> epsilons{0.5, 1.0};
  std::size_t budget = kDefaultBudget;
};

/// For each n: greedy 1/n-nets X_n, Y_n (truncated at max_net_size points),
/// the canonical midpoint R_n, and the boundedness and midpoint checks.
/// Throws NotCertified if the solver runs out of budget.
std::vector<MidpointStep> midpoint_sequence(
    const SampledSpace& a, const SampledSpace& b,
    const std::vector<std::size_t>& ns,
    const MidpointSequenceOptions& options = {});

struct BoundednessReport {
  double bound_d = 0.0;
  double epsilon = 0.0;
  std::size_t max_net_size = 0;
  struct Entry {
    double diameter = 0.0;
    std::size_t net_size = 0;
  };
  std::vector<Entry> per_space;
};

BoundednessReport boundedness_report(const std::vector<FiniteMetricSpace>& family,
                                     double epsilon);

}  // namespace ghgeo
