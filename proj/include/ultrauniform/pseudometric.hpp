#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "ultrauniform/core.hpp"
#include "ultrauniform/uniformity.hpp"

namespace ultrauniform {

using Rational = boost::rational<std::int64_t>;

// Compare against Rational values only: boost's mixed rational/int operator==
// recurses forever under C++20 rewritten comparison candidates.
inline const Rational kZero{0};

/// Symmetric, nonnegative distance table with zero diagonal satisfying the
/// triangle inequality. Exact rational values; no tolerances anywhere.
class Pseudometric {
 public:
  /// Row-major n*n table. Throws InvalidArgument if any pseudometric axiom fails.
  Pseudometric(std::size_t n, std::vector<Rational> dist);

  static Pseudometric zero(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t x, std::size_t y) const { return dist_[x * n_ + y]; }
  Rational max_distance() const;

  /// Distinct strictly positive values, ascending.
  std::vector<Rational> positive_values() const;

  friend bool operator==(const Pseudometric&, const Pseudometric&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> dist_;
};

class PseudometricSystem {
 public:
  PseudometricSystem(std::size_t n, std::vector<Pseudometric> metrics);

  std::size_t size() const { return n_; }
  const std::vector<Pseudometric>& metrics() const { return metrics_; }

 private:
  std::size_t n_;
  std::vector<Pseudometric> metrics_;
};

/// Descending chain full = D_1 ⊇ D_2 ⊇ ... ⊇ D_k of equivalence relations,
/// constant after D_k.
class Chain {
 public:
  /// Throws InvalidArgument if the first step is not the full relation, a
  /// later step is not an equivalence, or the chain is not descending.
  Chain(std::size_t n, std::vector<Relation> steps);

  std::size_t size() const { return n_; }
  const std::vector<Relation>& steps() const { return steps_; }
  std::size_t depth() const { return steps_.size(); }

  /// D_m for any m >= 1, following the constant tail.
  const Relation& step(std::size_t m) const;

 private:
  std::size_t n_;
  std::vector<Relation> steps_;
};

bool is_na(const Pseudometric& d);

/// Pointwise maximum. Throws InvalidArgument on an empty list.
Pseudometric sup_pm(std::span<const Pseudometric> ds);

/// { (x,y) | d(x,y) < eps }. Throws InvalidArgument unless eps > 0.
Relation ball_relation(const Pseudometric& d, const Rational& eps);

/// Distinct ball relations over every metric and every threshold that can
/// change the relation: each realized positive distance and one value past
/// the maximum.
DiagonalBasis basis_from_system(const PseudometricSystem& m);

bool systems_equivalent(const PseudometricSystem& m, const PseudometricSystem& other);

/// d(x,y) = 0 inside the tail step, otherwise 1/j for the deepest step j
/// containing (x,y).
Pseudometric chain_pm(const Chain& chain);

/// One chain metric per equivalence of the witness basis, built from the
/// chains [full, D].
PseudometricSystem system_from_na_basis(const DiagonalBasis& b);

/// The descending chain D_1 = full, D_{i+1} = D_i ∩ E_{i+1}; full is
/// prepended when the first relation is not already the full relation.
Chain metrization_chain(std::span<const Relation> equivalences);

/// Single non-Archimedean pseudometric inducing the uniformity generated by
/// the equivalences together with the full relation.
Pseudometric metrize(std::span<const Relation> equivalences);

}  // namespace ultrauniform
