#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultrauniform/errors.hpp"
#include "ultrauniform/point_set.hpp"

namespace ultrauniform {

/// The underlying finite set {0, ..., n-1}. Labels are presentation only.
struct Carrier {
  std::size_t n = 1;
  std::optional<std::vector<std::string>> labels;

  /// Throws InvalidArgument unless 1 <= n <= kMaxPoints and labels are
  /// distinct and of length n.
  void check() const;
};

void check_carrier_size(std::size_t n);

/// Binary relation on an n-point carrier stored as n row masks; row x is the
/// slice D[x] = { y | (x,y) in D }.
class Relation {
 public:
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  static Relation from_rows(std::vector<PointSet> rows);
  static Relation from_pairs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return rows_.size(); }
  bool contains(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }
  void insert(std::size_t x, std::size_t y);
  PointSet slice(std::size_t x) const { return rows_[x]; }
  std::size_t count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool subset_of(const Relation& other) const;

  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator|(const Relation& a, const Relation& b);
  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  std::vector<PointSet> rows_;
};

/// Partition of the carrier into nonempty disjoint blocks, kept in canonical
/// order (blocks by minimum element).
class Partition {
 public:
  /// Throws InvalidArgument on empty, overlapping, out-of-range or missing points.
  Partition(std::size_t n, std::vector<PointSet> blocks);
  Partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);

  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  PointSet block_of(std::size_t x) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_;
  std::vector<PointSet> blocks_;
};

/// Cover of the carrier by nonempty subsets, deduplicated and sorted by
/// element lists.
class Cover {
 public:
  /// Throws InvalidArgument if a set is empty, leaves the carrier, or the
  /// union misses a point.
  Cover(std::size_t n, std::vector<PointSet> sets);
  Cover(std::size_t n, const std::vector<std::vector<std::size_t>>& sets);
  explicit Cover(const Partition& p);

  std::size_t size() const { return n_; }
  const std::vector<PointSet>& sets() const { return sets_; }
  bool is_partition() const;

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;

 private:
  std::size_t n_;
  std::vector<PointSet> sets_;
};

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

PointSet set_from_indices(std::size_t n, std::span<const std::size_t> indices);

Relation compose(const Relation& r, const Relation& s);
Relation inverse(const Relation& r);
bool is_equivalence(const Relation& r);

/// Least equivalence relation containing r.
Relation eq_closure(const Relation& r);

/// Throws PreconditionFailed unless e is an equivalence.
Partition to_partition(const Relation& e);
Relation to_relation(const Partition& p);

/// Coarsest common refinement.
Partition meet(const Partition& p, const Partition& q);

/// Every set of `fine` lies inside some set of `coarse`.
bool refines(const Cover& fine, const Cover& coarse);
bool refines(const Partition& fine, const Cover& coarse);

}  // namespace ultrauniform
