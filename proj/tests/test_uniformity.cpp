#include <gtest/gtest.h>

#include <set>
#include <utility>
#include <vector>

#include "support/brute_force.hpp"
#include "ultrauniform/uniformity.hpp"

using namespace ultrauniform;

namespace {

using Sets = std::vector<std::vector<std::size_t>>;

Relation pairs(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> ps) {
  return Relation::from_pairs(n, ps);
}

Relation classes(std::size_t n, const Sets& blocks) { return to_relation(Partition(n, blocks)); }

// diagonal ∪ {(0,1),(1,0),(1,2),(2,1)} on three points.
Relation path_relation() { return Relation::identity(3) | pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}); }

std::vector<Relation> reflexive_relations(std::size_t n) {
  std::vector<Relation> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
    const auto r = brute::from_matrix(brute::matrix_from_code(n, code));
    if (r.is_reflexive()) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(ValidateDiagonal, Examples) {
  EXPECT_TRUE(validate_diagonal(DiagonalBasis(3, {Relation::full(3)})).valid());
  EXPECT_TRUE(validate_diagonal(DiagonalBasis(3, {Relation::identity(3)})).valid());

  const auto report = validate_diagonal(DiagonalBasis(3, {path_relation()}));
  ASSERT_FALSE(report.valid());
  bool half = false;
  for (const auto& v : report.violations) half = half || v.axiom == "half";
  EXPECT_TRUE(half);
}

TEST(ValidateDiagonal, PathRelationHasNoHalfEntourage) {
  // No superset E of D satisfies E∘E ⊆ D.
  const auto d = brute::to_matrix(path_relation());
  for (std::uint64_t code = 0; code < 512; ++code) {
    const auto e = brute::matrix_from_code(3, code);
    if (!brute::subset(d, e)) continue;
    EXPECT_FALSE(brute::subset(brute::compose(e, e), d)) << code;
  }
}

TEST(ValidateDiagonal, NonReflexiveEntourageReported) {
  const auto report = validate_diagonal(DiagonalBasis(2, {pairs(2, {{0, 1}})}));
  ASSERT_FALSE(report.valid());
  EXPECT_EQ(report.violations.front().axiom, "reflexive");
}

// A singleton basis {D} is valid exactly when D is an equivalence, and the
// distinct uniformities match an independent principal-filter enumeration.
TEST(ValidateDiagonal, SingletonBasesAgainstFilterEnumeration) {
  std::size_t valid = 0;
  for (const auto& d : reflexive_relations(3)) {
    const bool ok = validate_diagonal(DiagonalBasis(3, {d})).valid();
    EXPECT_EQ(ok, brute::is_equivalence(brute::to_matrix(d)));
    if (ok) ++valid;
  }
  EXPECT_EQ(valid, brute::count_uniformities_by_filters(3));
  EXPECT_EQ(valid, 5U);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(DiagonalBasis(3, {Relation::full(3)})), DiagonalBasis(3, {Relation::full(3)}));
  const auto e1 = classes(3, Sets{{0, 1}, {2}});
  const auto e2 = classes(3, Sets{{0}, {1, 2}});
  EXPECT_EQ(normalize(DiagonalBasis(3, {e1, e2})), DiagonalBasis(3, {Relation::identity(3)}));
  EXPECT_THROW(normalize(DiagonalBasis(3, {path_relation()})), PreconditionFailed);
}

TEST(UniformityEqual, Examples) {
  const auto e1 = classes(3, Sets{{0, 1}, {2}});
  const auto e2 = classes(3, Sets{{0}, {1, 2}});
  EXPECT_TRUE(uniformity_equal(DiagonalBasis(3, {e1, e2}), DiagonalBasis(3, {e2, e1})));
  EXPECT_FALSE(uniformity_equal(DiagonalBasis(2, {Relation::identity(2)}), DiagonalBasis(2, {Relation::full(2)})));
  EXPECT_TRUE(uniformity_equal(DiagonalBasis(3, {e1}), DiagonalBasis(3, {e1, Relation::full(3)})));
  EXPECT_THROW(uniformity_equal(DiagonalBasis(2, {Relation::full(2)}), DiagonalBasis(3, {Relation::full(3)})),
               CarrierMismatch);
}

TEST(InUniformity, SupersetsOfTheLeastEntourage) {
  const DiagonalBasis b(3, {classes(3, Sets{{0, 1}, {2}})});
  EXPECT_TRUE(in_uniformity(b, Relation::full(3)));
  EXPECT_TRUE(in_uniformity(b, classes(3, Sets{{0, 1}, {2}}) | pairs(3, {{2, 0}})));
  EXPECT_FALSE(in_uniformity(b, Relation::identity(3)));
}

TEST(NonArchimedean, EquivalenceBasisIsItsOwnWitness) {
  const DiagonalBasis b(3, {classes(3, Sets{{0, 1}, {2}}), Relation::full(3)});
  const auto verdict = is_non_archimedean(b);
  ASSERT_TRUE(verdict.non_archimedean);
  for (const auto& e : verdict.witness->entourages()) {
    EXPECT_TRUE(is_equivalence(e));
    EXPECT_TRUE(in_uniformity(b, e));
  }
  EXPECT_TRUE(uniformity_equal(*verdict.witness, b));
  EXPECT_THROW(is_non_archimedean(DiagonalBasis(3, {path_relation()})), PreconditionFailed);
}

// Every valid basis of at most two reflexive relations on n <= 3 is
// non-Archimedean, with D_min an equivalence.
TEST(NonArchimedean, ExhaustiveOnSmallCarriers) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rels = reflexive_relations(n);
    std::size_t valid = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (std::size_t j = i; j < rels.size(); ++j) {
        const DiagonalBasis b(n, {rels[i], rels[j]});
        if (!validate_diagonal(b).valid()) continue;
        ++valid;
        EXPECT_TRUE(brute::is_equivalence(brute::to_matrix(minimum_entourage(b))));
        EXPECT_TRUE(is_non_archimedean(b).non_archimedean);
      }
    }
    EXPECT_GT(valid, 0U);
  }
}

TEST(IntersectionClosure, MatchesSubsetIntersections) {
  const DiagonalBasis b(4, {classes(4, Sets{{0, 1}, {2, 3}}), classes(4, Sets{{0, 1, 2}, {3}}),
                            Relation::identity(4) | pairs(4, {{0, 1}, {1, 0}, {0, 3}, {3, 0}})});
  std::set<brute::Matrix> expected;
  for (const auto& m : brute::closure(b)) expected.insert(m);
  std::set<brute::Matrix> actual;
  for (const auto& r : intersection_closure(b)) actual.insert(brute::to_matrix(r));
  EXPECT_EQ(actual, expected);
}

TEST(CoverConversion, Examples) {
  const auto e = classes(3, Sets{{0, 1}, {2}});
  const auto u = cover_of(e);
  EXPECT_EQ(u, Cover(3, Sets{{0, 1}, {2}}));
  EXPECT_TRUE(u.is_partition());
  EXPECT_EQ(cover_of(Relation::full(3)), Cover(3, Sets{{0, 1, 2}}));
  EXPECT_EQ(cover_of(Relation::identity(2)), Cover(2, Sets{{0}, {1}}));

  EXPECT_EQ(relation_of(Cover(3, Sets{{0, 1}, {1, 2}})), path_relation());
  EXPECT_EQ(relation_of(Cover(3, Sets{{0, 1}, {2}})), e);
  EXPECT_EQ(relation_of(Cover(3, Sets{{0, 1, 2}})), Relation::full(3));
}

TEST(CoverConversion, DiagonalFromCoverBasis) {
  const CoverBasis cb(3, {Cover(3, Sets{{0, 1}, {2}})});
  EXPECT_EQ(diagonal_from_cover_basis(cb), DiagonalBasis(3, {classes(3, Sets{{0, 1}, {2}})}));
  EXPECT_THROW(diagonal_from_cover_basis(CoverBasis(3, {Cover(3, Sets{{0, 1}, {1, 2}})})), PreconditionFailed);
}

TEST(Star, Examples) {
  const Cover chain(3, Sets{{0, 1}, {1, 2}});
  EXPECT_EQ(star(PointSet::singleton(0), chain), PointSet(0b011));
  EXPECT_EQ(star(PointSet::singleton(1), chain), PointSet(0b111));
  EXPECT_FALSE(star_refines(chain, chain));
  EXPECT_TRUE(star_refines(Cover(3, Sets{{0}, {1}, {2}}), chain));
}

TEST(ValidateCover, Examples) {
  const CoverBasis partitions(4, {Cover(4, Sets{{0, 1}, {2, 3}}), Cover(4, Sets{{0, 1, 2, 3}}),
                                  Cover(Partition::discrete(4))});
  EXPECT_TRUE(validate_cover(partitions).valid());

  const auto report = validate_cover(CoverBasis(3, {Cover(3, Sets{{0, 1}, {1, 2}})}));
  ASSERT_FALSE(report.valid());
  EXPECT_EQ(report.violations.front().axiom, "star_refinement");
}

TEST(PartitionBasis, Examples) {
  const CoverBasis partitions(3, {Cover(3, Sets{{0, 1}, {2}}), Cover(3, Sets{{0, 1, 2}})});
  const auto verdict = has_partition_basis(partitions);
  ASSERT_TRUE(verdict.has_partition_basis);
  EXPECT_EQ(*verdict.witness, partitions);

  const DiagonalBasis eqs(3, {classes(3, Sets{{0, 1}, {2}}), classes(3, Sets{{0}, {1, 2}})});
  EXPECT_TRUE(has_partition_basis(cover_basis_from_diagonal(eqs)).has_partition_basis);

  const CoverBasis mixed(3, {Cover(3, Sets{{0, 1}, {1, 2}}), Cover(Partition::discrete(3))});
  const auto mixed_verdict = has_partition_basis(mixed);
  ASSERT_TRUE(mixed_verdict.has_partition_basis);
  EXPECT_EQ(*mixed_verdict.witness, CoverBasis(3, {Cover(Partition::discrete(3))}));
  EXPECT_TRUE(covering_uniformity_equal(*mixed_verdict.witness, mixed));
}

TEST(RoundTrip, Examples) {
  EXPECT_TRUE(diagonal_roundtrip_holds(DiagonalBasis(3, {Relation::full(3)})));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 16); ++code) {
    const auto m = brute::matrix_from_code(4, code);
    if (!brute::is_equivalence(m)) continue;
    const DiagonalBasis b(4, {brute::from_matrix(m)});
    EXPECT_TRUE(diagonal_roundtrip_holds(b));
    EXPECT_TRUE(cover_roundtrip_holds(cover_basis_from_diagonal(b)));
  }
}

TEST(RoundTrip, NonEquivalenceGenerators) {
  // Both generators fail transitivity; their intersection is the identity.
  const auto a = Relation::identity(3) | pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  const auto b = Relation::identity(3);
  const DiagonalBasis basis(3, {a, b});
  ASSERT_TRUE(validate_diagonal(basis).valid());
  EXPECT_TRUE(diagonal_roundtrip_holds(basis));
  const auto cb = cover_basis_from_diagonal(basis);
  EXPECT_TRUE(validate_cover(cb).valid());
  EXPECT_TRUE(cover_roundtrip_holds(cb));
}

TEST(CoverBasis, RejectsEmptyAndMismatchedCarriers) {
  EXPECT_THROW(CoverBasis(3, {}), InvalidArgument);
  EXPECT_THROW(CoverBasis(3, {Cover(Partition::discrete(2))}), CarrierMismatch);
  EXPECT_THROW(DiagonalBasis(3, {}), InvalidArgument);
  EXPECT_THROW(DiagonalBasis(3, {Relation::full(2)}), CarrierMismatch);
}
