#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ultrauniform/core.hpp"
#include "ultrauniform/uniformity.hpp"
#include "ultrauniform/validation.hpp"

namespace ultrauniform {

/// Topology on a finite carrier given by its full family of open sets, kept
/// deduplicated and sorted by size, then by element list.
class FiniteTopology {
 public:
  /// Throws InvalidArgument if a set leaves the carrier. The topology axioms
  /// are checked by validate_topology, not here.
  FiniteTopology(std::size_t n, std::vector<PointSet> opens);

  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology indiscrete(std::size_t n);

  std::size_t size() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement(n_)); }

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  std::size_t n_;
  std::vector<PointSet> opens_;
};

/// f : X -> {0,1}, stored as f^{-1}(1).
struct BinaryMap {
  std::size_t n = 1;
  PointSet ones;

  int operator()(std::size_t x) const { return ones.contains(x) ? 1 : 0; }
  friend bool operator==(const BinaryMap&, const BinaryMap&) = default;
};

struct SeparationVerdict {
  bool holds = false;
  /// Closed set A and point x outside A that no clopen set separates.
  std::optional<std::pair<PointSet, std::size_t>> counterexample;
};

struct UniformizabilityVerdict {
  bool uniformizable = false;
  std::optional<DiagonalBasis> witness;
};

ValidationReport validate_topology(const FiniteTopology& t);

std::vector<PointSet> clopen_sets(const FiniteTopology& t);

/// Every open set is a union of clopen sets.
bool is_zero_dimensional(const FiniteTopology& t);

/// Every closed A and x outside A are split by complementary open sets; the
/// part containing x is then clopen, so only clopen sets are searched.
SeparationVerdict satisfies_ta(const FiniteTopology& t);

bool is_continuous(const BinaryMap& f, const FiniteTopology& t);
std::vector<BinaryMap> continuous_binary_maps(const FiniteTopology& t);

/// Intersection closure of the fibre relations D_f = { f(x) = f(y) }.
DiagonalBasis uniformity_from_binary_maps(std::span<const BinaryMap> maps);

/// Opens are the unions of blocks.
FiniteTopology partition_topology(const Partition& p);

/// Topology of the uniformity: the partition topology of D_min.
FiniteTopology induced_topology(const DiagonalBasis& b);

/// Uniformizes through the continuous binary maps and compares the induced
/// topology with t.
UniformizabilityVerdict is_uniformizable_na(const FiniteTopology& t);

}  // namespace ultrauniform
