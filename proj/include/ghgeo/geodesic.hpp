#pragma once

#include <variant>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/metric_space.hpp"

namespace ghgeo {

/// The pairs of a correspondence R between X and Y, measured by
///
///     |(x,y)(x',y')| = lambda * |xx'| + (1 - lambda) * |yy'|.
///
/// `lambda` weights the X coordinate. For lambda in (0,1) this is a metric on
/// R; at lambda = 1 (resp. 0) it is a semi-metric whose zero-distance quotient
/// is isometric to X (resp. Y).
class BlendedSpace {
 public:
  const Correspondence& base() const noexcept { return base_; }
  const FiniteMetricSpace& x() const noexcept { return x_; }
  const FiniteMetricSpace& y() const noexcept { return y_; }
  double lambda() const noexcept { return lambda_; }
  const SemiMetricMatrix& matrix() const noexcept { return matrix_; }
  /// One label per pair of base(): "(xlabel,ylabel)".
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// The blend as a genuine metric space. Only valid for lambda in (0,1)
  /// (otherwise throws ZeroOffDiagonal when pairs collapse).
  FiniteMetricSpace as_metric_space() const;

 private:
  BlendedSpace(Correspondence base, FiniteMetricSpace x, FiniteMetricSpace y,
               double lambda, SemiMetricMatrix matrix,
               std::vector<std::string> labels)
      : base_(std::move(base)), x_(std::move(x)), y_(std::move(y)),
        lambda_(lambda), matrix_(std::move(matrix)), labels_(std::move(labels)) {}

  friend BlendedSpace blended_space(const Correspondence&,
                                    const FiniteMetricSpace&,
                                    const FiniteMetricSpace&, double);

  Correspondence base_;
  FiniteMetricSpace x_;
  FiniteMetricSpace y_;
  double lambda_;
  SemiMetricMatrix matrix_;
  std::vector<std::string> labels_;
};

BlendedSpace blended_space(const Correspondence& r, const FiniteMetricSpace& x,
                           const FiniteMetricSpace& y, double lambda);

enum class Side { X, Y };

/// Quotient of the blend at lambda = 1 (Side::X) or lambda = 0 (Side::Y).
FiniteMetricSpace endpoint_space(const Correspondence& r,
                                 const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y, Side which);

struct SideDistortions {
  /// distortion of {(x, (x,y))} between X and the blend; = (1 - lambda) dis R
  double dis_rx = 0.0;
  /// distortion of {((x,y), y)} between the blend and Y; = lambda dis R
  double dis_ry = 0.0;
};

SideDistortions side_distortions(const Correspondence& r,
                                 const FiniteMetricSpace& x,
                                 const FiniteMetricSpace& y, double lambda);

/// Two spaces, a certified optimal correspondence and d = d_GH(X, Y).
struct GeodesicSpec {
  FiniteMetricSpace x;
  FiniteMetricSpace y;
  Correspondence r;
  double d = 0.0;

  /// Throws NotCertified unless `result` is certified.
  static GeodesicSpec from_result(FiniteMetricSpace x, FiniteMetricSpace y,
                                  const GHResult& result);
  /// Solves with gh_exact; throws NotCertified if the budget runs out.
  static GeodesicSpec solve(FiniteMetricSpace x, FiniteMetricSpace y,
                            std::size_t budget = kDefaultBudget);
};

/// Weight on X of the geodesic point at time t: 1 - t/d (1 when d = 0).
double lambda_at(const GeodesicSpec& spec, double t);

using GeodesicPoint = std::variant<FiniteMetricSpace, BlendedSpace>;

/// g(t) for t in [0, d], oriented so that g(0) is X and g(d) is Y. Endpoints
/// come back quotiented as FiniteMetricSpace; interior points as BlendedSpace.
GeodesicPoint geodesic_point(const GeodesicSpec& spec, double t);

/// Flattens either alternative of a GeodesicPoint to a metric space.
FiniteMetricSpace to_metric_space(const GeodesicPoint& point);

/// Blend at lambda = 1/2 on a certified optimal correspondence.
FiniteMetricSpace canonical_midpoint(const GeodesicSpec& spec);
FiniteMetricSpace canonical_midpoint(const FiniteMetricSpace& x,
                                     const FiniteMetricSpace& y,
                                     std::size_t budget = kDefaultBudget);

inline constexpr double kSandwichTolerance = 1e-9;

/// Certificate that d_GH(g(s), g(t)) = t - s, built without solving the
/// larger instance:
///  - upper: half the distortion of the identity pairing of R's points
///    between the blends at s and t, computed entrywise;
///  - lower: d - (upper bound for d_GH(X, g(s))) - (upper bound for
///    d_GH(g(t), Y)), the bounds coming from the side distortions.
struct SandwichReport {
  double s = 0.0;
  double t = 0.0;
  double expected = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  bool certified = false;
};

SandwichReport verify_sandwich(const GeodesicSpec& spec, double s, double t);

}  // namespace ghgeo
