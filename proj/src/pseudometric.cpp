#include "ultrauniform/pseudometric.hpp"

#include <algorithm>
#include <set>

namespace ultrauniform {

Pseudometric::Pseudometric(std::size_t n, std::vector<Rational> dist) : n_(n), dist_(std::move(dist)) {
  check_carrier_size(n);
  if (dist_.size() != n * n) throw InvalidArgument("distance table must have n*n entries");
  const auto& d = *this;
  for (std::size_t x = 0; x < n; ++x) {
    if (d(x, x) != kZero) throw InvalidArgument("pseudometric: d(x,x) must be 0");
    for (std::size_t y = 0; y < n; ++y) {
      if (d(x, y) < kZero) throw InvalidArgument("pseudometric: negative distance");
      if (d(x, y) != d(y, x)) throw InvalidArgument("pseudometric: distance table is not symmetric");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, y) > d(x, z) + d(z, y)) throw InvalidArgument("pseudometric: triangle inequality fails");
      }
    }
  }
}

Pseudometric Pseudometric::zero(std::size_t n) { return Pseudometric(n, std::vector<Rational>(n * n)); }

Rational Pseudometric::max_distance() const { return *std::max_element(dist_.begin(), dist_.end()); }

std::vector<Rational> Pseudometric::positive_values() const {
  std::set<Rational> values;
  for (const auto& v : dist_) {
    if (v > kZero) values.insert(v);
  }
  return {values.begin(), values.end()};
}

PseudometricSystem::PseudometricSystem(std::size_t n, std::vector<Pseudometric> metrics)
    : n_(n), metrics_(std::move(metrics)) {
  check_carrier_size(n);
  if (metrics_.empty()) throw InvalidArgument("pseudometric system needs at least one metric");
  std::vector<Pseudometric> unique;
  for (auto& d : metrics_) {
    require_same_carrier(n, d.size());
    if (std::find(unique.begin(), unique.end(), d) == unique.end()) unique.push_back(std::move(d));
  }
  metrics_ = std::move(unique);
}

Chain::Chain(std::size_t n, std::vector<Relation> steps) : n_(n), steps_(std::move(steps)) {
  check_carrier_size(n);
  if (steps_.empty()) throw InvalidArgument("chain needs at least one step");
  for (const auto& s : steps_) require_same_carrier(n, s.size());
  if (steps_.front() != Relation::full(n)) throw InvalidArgument("chain must start at the full relation");
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    if (!is_equivalence(steps_[i])) throw InvalidArgument("chain step " + std::to_string(i + 1) + " is not an equivalence");
    if (!steps_[i].subset_of(steps_[i - 1])) throw InvalidArgument("chain is not descending at step " + std::to_string(i + 1));
  }
}

const Relation& Chain::step(std::size_t m) const {
  if (m == 0) throw InvalidArgument("chain steps are numbered from 1");
  return steps_[std::min(m, steps_.size()) - 1];
}

bool is_na(const Pseudometric& d) {
  const auto n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, y) > std::max(d(x, z), d(z, y))) return false;
      }
    }
  }
  return true;
}

Pseudometric sup_pm(std::span<const Pseudometric> ds) {
  if (ds.empty()) throw InvalidArgument("sup of an empty list of pseudometrics");
  const auto n = ds.front().size();
  std::vector<Rational> dist(n * n);
  for (const auto& d : ds) {
    require_same_carrier(n, d.size());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) dist[x * n + y] = std::max(dist[x * n + y], d(x, y));
    }
  }
  return Pseudometric(n, std::move(dist));
}

Relation ball_relation(const Pseudometric& d, const Rational& eps) {
  if (eps <= kZero) throw InvalidArgument("ball radius must be positive");
  Relation out(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (d(x, y) < eps) out.insert(x, y);
    }
  }
  return out;
}

DiagonalBasis basis_from_system(const PseudometricSystem& m) {
  std::vector<Relation> balls;
  for (const auto& d : m.metrics()) {
    auto thresholds = d.positive_values();
    thresholds.push_back(d.max_distance() + Rational(1));
    for (const auto& eps : thresholds) balls.push_back(ball_relation(d, eps));
  }
  return DiagonalBasis(m.size(), std::move(balls));
}

bool systems_equivalent(const PseudometricSystem& m, const PseudometricSystem& other) {
  require_same_carrier(m.size(), other.size());
  return uniformity_equal(basis_from_system(m), basis_from_system(other));
}

Pseudometric chain_pm(const Chain& chain) {
  const auto n = chain.size();
  const auto& steps = chain.steps();
  std::vector<Rational> dist(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (steps.back().contains(x, y)) continue;
      // Steps are descending, so the deepest containing step is the last one
      // before the first miss.
      std::size_t deepest = 1;
      while (deepest < steps.size() && steps[deepest].contains(x, y)) ++deepest;
      dist[x * n + y] = Rational(1, static_cast<std::int64_t>(deepest));
    }
  }
  return Pseudometric(n, std::move(dist));
}

PseudometricSystem system_from_na_basis(const DiagonalBasis& b) {
  auto verdict = is_non_archimedean(b);
  if (!verdict.non_archimedean) throw PreconditionFailed("system_from_na_basis: basis is not non-Archimedean");
  const auto full = Relation::full(b.size());
  std::vector<Pseudometric> metrics;
  for (const auto& e : verdict.witness->entourages()) metrics.push_back(chain_pm(Chain(b.size(), {full, e})));
  return PseudometricSystem(b.size(), std::move(metrics));
}

Chain metrization_chain(std::span<const Relation> equivalences) {
  if (equivalences.empty()) throw InvalidArgument("metrize needs at least one equivalence relation");
  const auto n = equivalences.front().size();
  for (const auto& e : equivalences) {
    require_same_carrier(n, e.size());
    if (!is_equivalence(e)) throw PreconditionFailed("metrize: input relation is not an equivalence");
  }
  const auto full = Relation::full(n);
  std::vector<Relation> es(equivalences.begin(), equivalences.end());
  if (es.front() != full) es.insert(es.begin(), full);

  std::vector<Relation> steps{full};
  for (std::size_t i = 1; i < es.size(); ++i) steps.push_back(steps.back() & es[i]);
  return Chain(n, std::move(steps));
}

Pseudometric metrize(std::span<const Relation> equivalences) { return chain_pm(metrization_chain(equivalences)); }

}  // namespace ultrauniform
