#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ultrauniform/core.hpp"
#include "ultrauniform/pseudometric.hpp"
#include "ultrauniform/topology.hpp"
#include "ultrauniform/uniformity.hpp"

// Brute-force enumerators, seeded samplers and the cross-module theorem
// sweeps built on them.

namespace ultrauniform::oracle {

inline constexpr std::uint64_t kDefaultSeed = 20190501;
inline constexpr std::size_t kMaxExhaustiveTopologyPoints = 4;
inline constexpr std::size_t kMaxExhaustivePartitionPoints = 8;
inline constexpr std::size_t kMaxExhaustiveBasisPoints = 5;
inline constexpr std::size_t kMaxExhaustiveCoverPoints = 3;
inline constexpr std::size_t kMaxSampledPoints = 8;

enum class StructureKind { topologies, partitions, equivalence_bases, uniformities, valid_cover_bases };

std::optional<StructureKind> parse_structure_kind(std::string_view text);
std::string_view to_string(StructureKind kind);

/// What to enumerate. samples == 0 asks for the exhaustive family on exactly
/// n points; samples > 0 draws that many seeded instances on 1..n points.
struct EnumerationSpec {
  std::size_t n = 1;
  StructureKind kind = StructureKind::partitions;
  std::size_t max_generators = 3;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
};

using Structure = std::variant<FiniteTopology, Partition, DiagonalBasis, CoverBasis>;

std::vector<Structure> enumerate(const EnumerationSpec& spec);

/// Every family of subsets containing {} and X closed under pairwise union
/// and intersection. n <= 4.
std::vector<FiniteTopology> all_topologies(std::size_t n);

/// Restricted-growth enumeration.
std::vector<Partition> all_partitions(std::size_t n);
std::vector<Relation> all_equivalences(std::size_t n);

/// Every set of 1..max_generators distinct equivalence relations.
std::vector<DiagonalBasis> equivalence_bases(std::size_t n, std::size_t max_generators);

/// One canonical basis {E} per equivalence relation E.
std::vector<DiagonalBasis> all_uniformities(std::size_t n);

/// Every cover basis of one or two covers that passes validate_cover. n <= 3.
std::vector<CoverBasis> valid_cover_bases(std::size_t n);

/// Seeded generator of random instances.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);
  std::size_t carrier_size(std::size_t max_n) { return uniform(1, max_n); }

  Relation equivalence(std::size_t n);
  DiagonalBasis equivalence_basis(std::size_t n, std::size_t max_generators);

  /// Valid basis whose members need not be symmetric or transitive; only
  /// their intersection is an equivalence.
  DiagonalBasis valid_basis(std::size_t n);

  /// Ultrametric from random agglomerative merging with random rational
  /// heights; points in a common initial block sit at distance 0.
  Pseudometric na_pseudometric(std::size_t n);

  FiniteTopology topology(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

/// Pointwise facts about a chain metric d_κ: values lie in {0} ∪ {1/j};
/// (x,y) in D_k implies d <= 1/k; d < 1/m implies (x,y) in D_{m+1}.
bool chain_bounds_hold(const Chain& chain);

/// For d = sup of the chain metrics and every k: (x,y) in the intersection of
/// the k-th steps implies d(x,y) <= 1/k.
bool sup_bound_holds(std::span<const Chain> chains);

enum class TheoremId { t2_4, t3_2, t4_1, r2_1_roundtrip };

std::optional<TheoremId> parse_theorem_id(std::string_view text);
std::string_view to_string(TheoremId id);

/// The instance family a theorem is swept over by default.
EnumerationSpec default_spec(TheoremId id, std::size_t n);

struct SweepReport {
  std::string theorem;
  std::size_t n = 0;
  std::size_t checked = 0;
  std::size_t satisfying = 0;
  std::size_t discrepancies = 0;
  nlohmann::json first_counterexample;  // null when none
  std::optional<std::uint64_t> seed;
  std::int64_t ms = 0;
};

/// Runs the theorem's cross-module equivalence on every instance of `spec`.
/// Throws InvalidArgument when the kind does not fit the theorem.
SweepReport theorem_sweep(TheoremId id, const EnumerationSpec& spec);

nlohmann::json to_json(const SweepReport& report);

}  // namespace ultrauniform::oracle
