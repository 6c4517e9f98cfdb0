#include "nonneg/hopm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "nonneg/analysis.hpp"
#include "unit_random.hpp"

namespace nonneg {
namespace {

void normalize_sum(Vector& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& c : v) c /= s;
}

struct Ratios {
  BracketBounds bounds;
  double residual;
};

// Bounds of y / p and the residual ||y - mid * p|| for the same pair.
Ratios ratios(std::span<const double> y, std::span<const double> p) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] / p[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double mid = 0.5 * (lo + hi);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - mid * p[i];
    sum += d * d;
  }
  return {{lo, hi}, std::sqrt(sum)};
}

}  // namespace

void HopmConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

Vector start_vector(std::size_t n, StartKind kind, std::uint64_t seed) {
  Vector x(n, 1.0 / static_cast<double>(n));
  if (kind == StartKind::Random) {
    std::mt19937_64 gen(seed);
    for (double& c : x) c = detail::open_unit(gen);
    normalize_sum(x);
  }
  return x;
}

BracketBounds cw_bounds(const Tensor& t, std::span<const double> x) {
  if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); })) {
    throw std::invalid_argument("Collatz-Wielandt bounds need a strictly positive vector");
  }
  const Vector y = contract(t, x);
  return ratios(y, power(x, t.order() - 1)).bounds;
}

Vector hopm_step(const Tensor& t, std::span<const double> x) {
  Vector next = f_map(t, x);
  const double s = std::accumulate(next.begin(), next.end(), 0.0);
  if (!(s > 0.0)) throw ZeroIterate("power step produced the zero vector");
  for (double& c : next) c /= s;
  return next;
}

HopmResult hopm_run(const Tensor& t, const HopmConfig& config) {
  config.validate();
  const std::size_t n = t.dim();
  if (n == 1) {
    const double v = t.diagonal(0);
    return {{v, {1.0}, 0.0}, {v, v}, 1, {{1, v, v, 0.0, 0.0}}};
  }
  if (!matrix_irreducible(representation(t))) {
    throw NotWeaklyIrreducible("power method needs a weakly irreducible tensor");
  }

  const Tensor run = config.shift ? add_identity(t) : t;
  const double offset = config.shift ? 1.0 : 0.0;
  const int degree = t.order() - 1;

  Vector x = start_vector(n, config.start, config.seed);
  HopmTrace trace;
  BracketBounds best{0.0, std::numeric_limits<double>::infinity()};
  std::size_t stalled = 0;

  for (std::size_t k = 1; k <= config.max_iterations; ++k) {
    const Vector y = contract(run, x);
    const Ratios r = ratios(y, power(x, degree));
    const double gap = r.bounds.width();
    trace.push_back({k, r.bounds.upper - offset, r.bounds.lower - offset, gap, r.residual});

    if (gap <= config.tolerance) {
      const double lambda = r.bounds.midpoint() - offset;
      const BracketBounds bracket{r.bounds.lower - offset, r.bounds.upper - offset};
      const double res = residual(t, lambda, x);
      return {{lambda, std::move(x), res}, bracket, k, std::move(trace)};
    }

    if (gap < best.width()) {
      best = {r.bounds.lower - offset, r.bounds.upper - offset};
      stalled = 0;
    } else if (++stalled >= config.stagnation_window) {
      throw ConvergenceError("power method stagnated: bracket width " + std::to_string(best.width()) +
                                 " after " + std::to_string(k) + " iterations",
                             best, k, std::move(trace));
    }

    x = root(y, degree);
    normalize_sum(x);
  }
  throw ConvergenceError("power method reached " + std::to_string(config.max_iterations) +
                             " iterations with bracket width " + std::to_string(best.width()),
                         best, config.max_iterations, std::move(trace));
}

double hilbert_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hilbert_distance: length mismatch");
  auto valid = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double c) { return c >= 0.0; }) &&
           std::any_of(v.begin(), v.end(), [](double c) { return c > 0.0; });
  };
  if (!valid(x) || !valid(y)) {
    throw std::invalid_argument("hilbert_distance needs nonzero nonnegative vectors");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] > 0.0) != (y[i] > 0.0)) return std::numeric_limits<double>::infinity();
    if (x[i] == 0.0) continue;
    const double r = y[i] / x[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return std::log(hi / lo);
}

}  // namespace nonneg
