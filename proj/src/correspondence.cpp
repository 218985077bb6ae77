#include "ghgeo/correspondence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "ghgeo/error.hpp"

namespace ghgeo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pairs_in_range(const Relation& s, std::size_t n, std::size_t m) {
  for (const auto& [i, j] : s.pairs())
    if (i >= n || j >= m)
      throw Error(ErrorKind::IndexOutOfRange,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside a " + std::to_string(n) + "x" +
                      std::to_string(m) + " grid",
                  {i, j});
}

// Max of | |xx'| - |yy'| | over pairs, giving up as soon as `cutoff` is
// reached. With cutoff = inf this is the plain distortion.
double pair_distortion(std::span<const IndexPair> pairs,
                       const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       double cutoff = kInf) {
  double worst = 0.0;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const double gap = std::abs(x(pairs[p].first, pairs[q].first) -
                                  y(pairs[p].second, pairs[q].second));
      if (gap > worst) {
        worst = gap;
        if (worst >= cutoff) return worst;
      }
    }
  return worst;
}

// Greedy map A -> B: points of A by decreasing eccentricity, each sent to the
// point of B that keeps the running distortion smallest (ties to lowest index).
std::vector<Index> greedy_map(const FiniteMetricSpace& a,
                              const FiniteMetricSpace& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index p, Index q) {
    return eccentricity(a, p) > eccentricity(a, q);
  });

  std::vector<Index> f(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    const Index p = order[step];
    Index best = 0;
    double best_cost = kInf;
    for (Index q = 0; q < m; ++q) {
      double cost = 0.0;
      if (step == 0) {
        cost = std::abs(eccentricity(a, p) - eccentricity(b, q));
      } else {
        for (std::size_t e = 0; e < step; ++e) {
          const Index r = order[e];
          cost = std::max(cost, std::abs(a(p, r) - b(q, f[r])));
        }
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = q;
      }
    }
    f[p] = best;
  }
  return f;
}

// Seed candidates: each greedy map completed by the other map's pairs on the
// points it misses, and the union of both graphs. Returns the best.
std::vector<IndexPair> seed_correspondence(const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y) {
  const auto f = greedy_map(x, y);
  const auto g = greedy_map(y, x);
  const std::size_t n = x.size();
  const std::size_t m = y.size();

  std::vector<bool> hit_y(m, false), hit_x(n, false);
  for (Index i = 0; i < n; ++i) hit_y[f[i]] = true;
  for (Index j = 0; j < m; ++j) hit_x[g[j]] = true;

  std::vector<std::vector<IndexPair>> candidates(3);
  for (Index i = 0; i < n; ++i) {
    candidates[0].emplace_back(i, f[i]);
    candidates[2].emplace_back(i, f[i]);
    if (!hit_x[i]) candidates[1].emplace_back(i, f[i]);
  }
  for (Index j = 0; j < m; ++j) {
    candidates[1].emplace_back(g[j], j);
    candidates[2].emplace_back(g[j], j);
    if (!hit_y[j]) candidates[0].emplace_back(g[j], j);
  }

  std::size_t best = 0;
  double best_dis = kInf;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto& pairs = candidates[c];
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    const double dis = pair_distortion(pairs, x, y);
    if (dis < best_dis) {
      best_dis = dis;
      best = c;
    }
  }
  return candidates[best];
}

// Depth-first branch and bound. Level L fixes the partner set of the L-th
// X-point in decreasing-eccentricity order. cost_[L][x*m + y] holds the largest
// distortion the pair (x, y) would create against the pairs fixed above L, so
// a partner set's contribution is read off in O(|set|) plus its own diameter.
class PartnerSetSearch {
 public:
  PartnerSetSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                   std::size_t budget, double incumbent)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), budget_(budget),
        best_(incumbent),
        full_(m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1),
        order_(n_), partners_(n_, 0),
        cost_(n_, std::vector<double>(n_ * m_, 0.0)) {
    std::iota(order_.begin(), order_.end(), Index{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Index p, Index q) {
      return eccentricity(x, p) > eccentricity(x, q);
    });
  }

  void run() { descend(0, 0.0, 0); }

  bool aborted() const noexcept { return aborted_; }
  std::size_t nodes() const noexcept { return nodes_; }
  double best() const noexcept { return best_; }
  const std::optional<std::vector<IndexPair>>& improved() const noexcept {
    return improved_;
  }

 private:
  void descend(std::size_t level, double partial, std::uint64_t covered) {
    const Index p = order_[level];
    const auto& cost = cost_[level];
    const bool last = level + 1 == n_;

    // Forward check: every later X-point needs an admissible partner, and a
    // missing Y-point no later X-point can take must be taken here.
    std::uint64_t later_reach = 0;
    for (std::size_t l = level + 1; l < n_; ++l) {
      const std::uint64_t reach = admissible(cost, order_[l]);
      if (reach == 0) return;
      later_reach |= reach;
    }
    const std::uint64_t candidates = admissible(cost, p);
    const std::uint64_t required = full_ & ~covered & ~later_reach;
    if ((required & ~candidates) != 0) return;

    std::vector<Index> elems;
    for (std::uint64_t c = candidates; c != 0; c &= c - 1)
      elems.push_back(static_cast<Index>(std::countr_zero(c)));

    const std::size_t min_k = std::max<std::size_t>(1, std::popcount(required));
    for (std::size_t k = min_k; k <= elems.size() && !aborted_; ++k) {
      Frame frame{level, p, partial, covered, required, last, k, elems};
      combine(frame, 0, 0, 0, partial);
    }
  }

  struct Frame {
    std::size_t level;
    Index point;
    double partial;
    std::uint64_t covered;
    std::uint64_t required;
    bool last;
    std::size_t k;
    const std::vector<Index>& elems;
  };

  // Lexicographic k-subsets of frame.elems, extending `chosen` from position
  // `start`. `value` is the partial distortion including the chosen members.
  void combine(const Frame& f, std::size_t start, std::size_t count,
               std::uint64_t chosen, double value) {
    if (count == f.k) {
      if ((chosen & f.required) != f.required) return;
      accept(f, chosen, value);
      return;
    }
    const auto& cost = cost_[f.level];
    for (std::size_t i = start; i + (f.k - count) <= f.elems.size(); ++i) {
      if (aborted_) return;
      const Index q = f.elems[i];
      const bool needed = (f.required >> q) & 1U;
      double v = std::max(value, cost[f.point * m_ + q]);
      for (std::uint64_t c = chosen; c != 0 && v < best_; c &= c - 1)
        v = std::max(v, y_(q, static_cast<Index>(std::countr_zero(c))));
      if (v < best_) combine(f, i + 1, count + 1, chosen | (std::uint64_t{1} << q), v);
      // Skipping a required member leaves no valid completion.
      if (needed) return;
    }
  }

  void accept(const Frame& f, std::uint64_t chosen, double value) {
    if (value >= best_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    partners_[f.point] = chosen;
    if (f.last) {
      best_ = value;
      std::vector<IndexPair> pairs;
      for (Index i = 0; i < n_; ++i)
        for (std::uint64_t c = partners_[i]; c != 0; c &= c - 1)
          pairs.emplace_back(i, static_cast<Index>(std::countr_zero(c)));
      improved_ = std::move(pairs);
      return;
    }
    const auto& cost = cost_[f.level];
    auto& next = cost_[f.level + 1];
    for (std::size_t l = f.level + 1; l < n_; ++l) {
      const Index r = order_[l];
      const double drp = x_(r, f.point);
      for (Index q = 0; q < m_; ++q) {
        double c = cost[r * m_ + q];
        for (std::uint64_t s = chosen; s != 0; s &= s - 1)
          c = std::max(c, std::abs(drp - y_(q, static_cast<Index>(std::countr_zero(s)))));
        next[r * m_ + q] = c;
      }
    }
    descend(f.level + 1, value, f.covered | chosen);
  }

  std::uint64_t admissible(const std::vector<double>& cost, Index p) const {
    std::uint64_t mask = 0;
    for (Index q = 0; q < m_; ++q)
      if (cost[p * m_ + q] < best_) mask |= std::uint64_t{1} << q;
    return mask;
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  std::size_t n_;
  std::size_t m_;
  std::size_t budget_;
  double best_;
  std::uint64_t full_;
  std::vector<Index> order_;
  std::vector<std::uint64_t> partners_;
  std::vector<std::vector<double>> cost_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<std::vector<IndexPair>> improved_;
};

GHResult solve_oriented(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        std::size_t budget) {
  const double floor = gh_lower_bound(x, y);
  std::vector<IndexPair> seed = seed_correspondence(x, y);
  const double seed_dis = pair_distortion(seed, x, y);

  GHResult result{0.0, Correspondence(Relation(seed), x.size(), y.size()),
                  seed_dis, floor, seed_dis / 2.0, 0, false};

  // The diameter bound already matches the seed: nothing to search.
  if (seed_dis <= std::abs(diameter(x) - diameter(y))) {
    result.certified = true;
  } else {
    PartnerSetSearch search(x, y, budget, seed_dis);
    search.run();
    result.nodes_explored = search.nodes();
    result.certified = !search.aborted();
    if (search.improved()) {
      result.optimal =
          Correspondence(Relation(*search.improved()), x.size(), y.size());
      result.distortion = search.best();
    }
  }
  result.distance = result.distortion / 2.0;
  result.upper_bound = result.distance;
  result.lower_bound = result.certified ? result.distance
                                        : std::min(floor, result.distance);
  return result;
}

}  // namespace

Relation::Relation(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw Error(ErrorKind::EmptyRelation, "relation is empty");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::full(std::size_t n, std::size_t m) {
  std::vector<IndexPair> pairs;
  pairs.reserve(n * m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) pairs.emplace_back(i, j);
  return Relation(std::move(pairs));
}

Relation Relation::identity(std::size_t n) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Relation(std::move(pairs));
}

Relation Relation::graph(std::span<const Index> f) {
  std::vector<IndexPair> pairs;
  for (Index i = 0; i < f.size(); ++i) pairs.emplace_back(i, f[i]);
  return Relation(std::move(pairs));
}

Correspondence::Correspondence(Relation relation, std::size_t n, std::size_t m)
    : relation_(std::move(relation)), n_(n), m_(m) {
  check_pairs_in_range(relation_, n, m);
  if (!is_correspondence(relation_, n, m))
    throw Error(ErrorKind::NotACorrespondence,
                "relation does not cover both sides of the " +
                    std::to_string(n) + "x" + std::to_string(m) + " grid");
}

Correspondence Correspondence::transposed() const {
  std::vector<IndexPair> swapped;
  swapped.reserve(size());
  for (const auto& [i, j] : pairs()) swapped.emplace_back(j, i);
  return Correspondence(Relation(std::move(swapped)), m_, n_);
}

double distortion(const Relation& s, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y) {
  check_pairs_in_range(s, x.size(), y.size());
  return pair_distortion(s.pairs(), x, y);
}

double map_distortion(std::span<const Index> f, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) {
  if (f.size() != x.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "map defined on " + std::to_string(f.size()) +
                    " points, domain has " + std::to_string(x.size()));
  return distortion(Relation::graph(f), x, y);
}

bool is_correspondence(const Relation& s, std::size_t n, std::size_t m) noexcept {
  std::vector<bool> hit_x(n, false), hit_y(m, false);
  for (const auto& [i, j] : s.pairs()) {
    if (i >= n || j >= m) return false;
    hit_x[i] = true;
    hit_y[j] = true;
  }
  return std::all_of(hit_x.begin(), hit_x.end(), [](bool b) { return b; }) &&
         std::all_of(hit_y.begin(), hit_y.end(), [](bool b) { return b; });
}

CorrespondenceEnumerator::CorrespondenceEnumerator(std::size_t n, std::size_t m)
    : n_(n), m_(m) {
  if (n == 0 || m == 0)
    throw Error(ErrorKind::EmptySpace, "cannot enumerate on an empty side");
  if (n * m > kMaxEnumerationCells)
    throw Error(ErrorKind::TooLarge,
                std::to_string(n) + "x" + std::to_string(m) +
                    " grid exceeds the enumeration cap of " +
                    std::to_string(kMaxEnumerationCells) + " cells");
  row_mask_ = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  end_ = std::uint64_t{1} << (n * m);
}

bool CorrespondenceEnumerator::covers(std::uint32_t mask) const noexcept {
  std::uint32_t columns = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint32_t row = (mask >> (i * m_)) & row_mask_;
    if (row == 0) return false;
    columns |= row;
  }
  return columns == row_mask_;
}

bool CorrespondenceEnumerator::advance() noexcept {
  while (++cursor_ < end_) {
    const auto mask = static_cast<std::uint32_t>(cursor_);
    if (covers(mask)) {
      mask_ = mask;
      return true;
    }
  }
  cursor_ = end_;
  return false;
}

Correspondence CorrespondenceEnumerator::current() const {
  std::vector<IndexPair> pairs;
  for (std::uint32_t c = mask_; c != 0; c &= c - 1) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(c));
    pairs.emplace_back(bit / m_, bit % m_);
  }
  return Correspondence(Relation(std::move(pairs)), n_, m_);
}

std::optional<Correspondence> CorrespondenceEnumerator::next() {
  if (!advance()) return std::nullopt;
  return current();
}

std::uint64_t count_correspondences(std::size_t n, std::size_t m) {
  CorrespondenceEnumerator e(n, m);
  std::uint64_t count = 0;
  while (e.advance()) ++count;
  return count;
}

GHResult gh_brute(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  CorrespondenceEnumerator e(x.size(), y.size());
  const std::size_t m = y.size();
  double best = kInf;
  std::uint32_t best_mask = 0;
  std::size_t visited = 0;
  std::vector<IndexPair> pairs;
  while (e.advance()) {
    ++visited;
    pairs.clear();
    for (std::uint32_t c = e.mask(); c != 0; c &= c - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(c));
      pairs.emplace_back(bit / m, bit % m);
    }
    const double dis = pair_distortion(pairs, x, y, best);
    if (dis < best) {
      best = dis;
      best_mask = e.mask();
    }
  }

  std::vector<IndexPair> optimal;
  for (std::uint32_t c = best_mask; c != 0; c &= c - 1) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(c));
    optimal.emplace_back(bit / m, bit % m);
  }
  const double d = best / 2.0;
  return GHResult{d,
                  Correspondence(Relation(std::move(optimal)), x.size(), m),
                  best,
                  d,
                  d,
                  visited,
                  true};
}

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  std::size_t budget) {
  constexpr std::size_t kMaxPartnerSide = 64;
  if (y.size() <= kMaxPartnerSide) return solve_oriented(x, y, budget);
  if (x.size() > kMaxPartnerSide)
    throw Error(ErrorKind::TooLarge,
                "both spaces exceed " + std::to_string(kMaxPartnerSide) +
                    " points");
  GHResult flipped = solve_oriented(y, x, budget);
  flipped.optimal = flipped.optimal.transposed();
  return flipped;
}

double gh_lower_bound(const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) noexcept {
  return std::abs(diameter(x) - diameter(y)) / 2.0;
}

double gh_upper_bound_from(const Correspondence& s, const FiniteMetricSpace& x,
                           const FiniteMetricSpace& y) {
  if (s.x_size() != x.size() || s.y_size() != y.size())
    throw Error(ErrorKind::NotACorrespondence,
                "correspondence was built for a different pair of spaces");
  return distortion(s.relation(), x, y) / 2.0;
}

}  // namespace ghgeo
