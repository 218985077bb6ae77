#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ghgeo/correspondence.hpp"
#include "ghgeo/error.hpp"
#include "ghgeo/metric_space.hpp"
#include "support/test_support.hpp"

using namespace ghgeo;
using namespace ghgeo::testing;

namespace {

// Naive triangle check, written out here so the validator is not its own judge.
bool satisfies_triangle(const Matrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      for (std::size_t k = 0; k < d.size(); ++k)
        if (d[i][j] > d[i][k] + d[k][j]) return false;
  return true;
}

}  // namespace

TEST_CASE("validate agrees with a naive triangle check on perturbed metrics") {
  Rng rng(101);
  std::uniform_real_distribution<double> bump(-3.0, 6.0);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Matrix d = random_metric_matrix(rng, 3 + trial % 4);
    const std::size_t n = d.size();
    const Index i = std::uniform_int_distribution<Index>(0, n - 2)(rng);
    const Index j = std::uniform_int_distribution<Index>(i + 1, n - 1)(rng);
    d[i][j] = d[j][i] = std::max(0.25, d[i][j] + bump(rng));
    if (satisfies_triangle(d)) {
      CHECK_NOTHROW(validate_metric(d));
      ++accepted;
    } else {
      try {
        validate_metric(d);
        FAIL("violation missed");
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::TriangleViolation);
        const auto& w = e.witness();
        REQUIRE(w.size() == 3);
        CHECK(d[w[0]][w[1]] > d[w[0]][w[2]] + d[w[2]][w[1]]);
      }
      ++rejected;
    }
  }
  CHECK(accepted > 20);
  CHECK(rejected > 20);
}

TEST_CASE("Hausdorff distance is a metric on subsets") {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_space(rng, 2, 8);
    const auto a = random_subset(rng, x.size());
    const auto b = random_subset(rng, x.size());
    const auto c = random_subset(rng, x.size());
    CHECK(hausdorff(x, a, a) == 0.0);
    CHECK(hausdorff(x, a, b) == hausdorff(x, b, a));
    CHECK(hausdorff(x, a, c) <= hausdorff(x, a, b) + hausdorff(x, b, c) + 1e-12);
    CHECK(hausdorff(x, a, b) <= diameter(x));
  }
}

TEST_CASE("greedy nets cover strictly and project_net halves nothing away") {
  Rng rng(103);
  std::uniform_real_distribution<double> scale(0.3, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_space(rng, 1, 9);
    const double eps = scale(rng);
    const auto s = epsilon_net(x, eps);
    CHECK(covering_radius(x, all_points(x.size()), s.net) == s.radius);
    CHECK(s.radius < eps);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) CHECK(x(s.net[a], s.net[b]) >= eps);

    const auto y = random_subset(rng, x.size());
    const auto p = project_net(x, s.net, y, eps);
    CHECK(p.size() <= s.size());
    CHECK(std::all_of(p.net.begin(), p.net.end(), [&](Index q) {
      return std::find(y.begin(), y.end(), q) != y.end();
    }));
    CHECK(covering_radius(x, y, p.net) < 2 * eps);
  }
}

TEST_CASE("quotient by zero distances") {
  Rng rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    // duplicate some points of a metric to get a pseudometric
    const auto base = random_space(rng, 1, 5);
    std::vector<Index> source = all_points(base.size());
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    for (std::size_t e = 0; e < extra; ++e)
      source.push_back(std::uniform_int_distribution<Index>(0, base.size() - 1)(rng));
    std::shuffle(source.begin(), source.end(), rng);
    Matrix m(source.size(), std::vector<double>(source.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < source.size(); ++i) {
      labels.push_back("p" + std::to_string(i));
      for (std::size_t j = 0; j < source.size(); ++j) m[i][j] = base(source[i], source[j]);
    }
    const auto q = quotient_zero_classes(validate_semi_metric(m), labels);
    CHECK(q.size() == base.size());
    CHECK(is_isometric(q, base).isometric);
    CHECK_NOTHROW(validate_metric(q.matrix(), q.labels()));
    const auto again = quotient_zero_classes(validate_semi_metric(q.matrix()), q.labels());
    CHECK(again.matrix() == q.matrix());
    CHECK(again.labels() == q.labels());
  }
}

TEST_CASE("isometry test agrees with zero Gromov-Hausdorff distance") {
  Rng rng(105);
  for (int trial = 0; trial < 80; ++trial) {
    const auto x = random_space(rng, 1, 4);
    const auto y = trial % 2 == 0 ? permuted(x, rng) : random_space(rng, x.size());
    const bool iso = is_isometric(x, y).isometric;
    CHECK(iso == (gh_brute(x, y).distance == 0.0));
    if (trial % 2 == 0) CHECK(iso);
  }
}

TEST_CASE("branch and bound matches exhaustive search") {
  Rng rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_space(rng, 2, 4);
    const auto y = random_space(rng, 2, 4);
    const auto fast = gh_exact(x, y);
    const auto slow = gh_brute(x, y);
    CHECK(fast.certified);
    CHECK(fast.distance == slow.distance);
    CHECK(fast.distance == gh_upper_bound_from(fast.optimal, x, y));
  }
}

TEST_CASE("Gromov-Hausdorff distance behaves like a metric") {
  Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_space(rng, 1, 5);
    const auto y = random_space(rng, 1, 5);
    const auto z = random_space(rng, 1, 5);
    const double xy = gh_exact(x, y).distance;
    const double yz = gh_exact(y, z).distance;
    const double xz = gh_exact(x, z).distance;
    CHECK(xy == gh_exact(y, x).distance);
    CHECK(xz <= xy + yz + 1e-12);
    CHECK(gh_lower_bound(x, y) <= xy);
    CHECK(xy <= std::max(diameter(x), diameter(y)) / 2);
  }
}
