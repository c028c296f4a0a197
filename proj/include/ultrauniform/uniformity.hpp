#pragma once

#include <optional>
#include <vector>

#include "ultrauniform/core.hpp"
#include "ultrauniform/validation.hpp"

namespace ultrauniform {

/// Finite generating family of a diagonal uniformity. The uniformity it
/// stands for is the filter of relations containing some finite intersection
/// of the listed entourages; the filter itself is never materialized.
class DiagonalBasis {
 public:
  /// Throws InvalidArgument on an empty list and CarrierMismatch if an
  /// entourage lives on another carrier. Duplicates are dropped, first
  /// occurrence wins.
  DiagonalBasis(std::size_t n, std::vector<Relation> entourages);

  std::size_t size() const { return n_; }
  const std::vector<Relation>& entourages() const { return entourages_; }

  friend bool operator==(const DiagonalBasis&, const DiagonalBasis&) = default;

 private:
  std::size_t n_;
  std::vector<Relation> entourages_;
};

/// Finite generating family of a covering uniformity: the uniform covers are
/// those refined by a finite meet of basis covers.
class CoverBasis {
 public:
  CoverBasis(std::size_t n, std::vector<Cover> covers);

  std::size_t size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }

  friend bool operator==(const CoverBasis&, const CoverBasis&) = default;

 private:
  std::size_t n_;
  std::vector<Cover> covers_;
};

struct NonArchimedeanVerdict {
  bool non_archimedean = false;
  std::optional<DiagonalBasis> witness;
};

struct PartitionBasisVerdict {
  bool has_partition_basis = false;
  std::optional<CoverBasis> witness;
};

/// All finite intersections of the entourages, sorted and deduplicated.
std::vector<Relation> intersection_closure(const DiagonalBasis& b);

/// Intersection of every entourage; the least member of the closure.
Relation minimum_entourage(const DiagonalBasis& b);

/// Whether r belongs to the filter generated by b.
bool in_uniformity(const DiagonalBasis& b, const Relation& r);

ValidationReport validate_diagonal(const DiagonalBasis& b);

/// Canonical singleton form {D_min}. Throws PreconditionFailed on an invalid basis.
DiagonalBasis normalize(const DiagonalBasis& b);

bool uniformity_equal(const DiagonalBasis& b1, const DiagonalBasis& b2);

/// Decides whether the uniformity has a basis of equivalence relations by
/// testing, for each member D of the closure, the candidates eq_closure(D0).
NonArchimedeanVerdict is_non_archimedean(const DiagonalBasis& b);

/// U_D = { D[x] } for every D in the intersection closure of b.
Cover cover_of(const Relation& d);
CoverBasis cover_basis_from_diagonal(const DiagonalBasis& b);

/// D_U = pairs sharing a member of U.
Relation relation_of(const Cover& u);
DiagonalBasis diagonal_from_cover_basis(const CoverBasis& cb);

/// Union of the members of u that meet a.
PointSet star(PointSet a, const Cover& u);

/// { star(V, v) | V in v } refines u.
bool star_refines(const Cover& v, const Cover& u);

/// Common refinement { A ∩ B } of two covers.
Cover cover_meet(const Cover& a, const Cover& b);
Cover cover_meet(const std::vector<Cover>& covers);

ValidationReport validate_cover(const CoverBasis& cb);

PartitionBasisVerdict has_partition_basis(const CoverBasis& cb);

/// Mutual refinement of the generated covering uniformities.
bool covering_uniformity_equal(const CoverBasis& a, const CoverBasis& b);

/// diagonal -> cover -> diagonal is uniformity-equal to the input.
bool diagonal_roundtrip_holds(const DiagonalBasis& b);

/// cover -> diagonal -> cover is covering-uniformity-equal to the input.
bool cover_roundtrip_holds(const CoverBasis& cb);

}  // namespace ultrauniform
