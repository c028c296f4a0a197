#include "ultrauniform/uniformity.hpp"

#include <algorithm>
#include <set>

#include "ultrauniform/io.hpp"

namespace ultrauniform {

namespace {

template <typename T>
void dedup_stable(std::vector<T>& items) {
  std::vector<T> out;
  out.reserve(items.size());
  for (auto& item : items) {
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(std::move(item));
  }
  items = std::move(out);
}

void require_valid(const DiagonalBasis& b, const char* op) {
  auto report = validate_diagonal(b);
  if (!report.valid()) {
    throw PreconditionFailed(std::string(op) + ": diagonal basis fails the uniformity axioms", std::move(report));
  }
}

void require_valid(const CoverBasis& cb, const char* op) {
  auto report = validate_cover(cb);
  if (!report.valid()) {
    throw PreconditionFailed(std::string(op) + ": cover basis fails the uniformity axioms", std::move(report));
  }
}

}  // namespace

DiagonalBasis::DiagonalBasis(std::size_t n, std::vector<Relation> entourages)
    : n_(n), entourages_(std::move(entourages)) {
  check_carrier_size(n);
  if (entourages_.empty()) throw InvalidArgument("diagonal basis needs at least one entourage");
  for (const auto& e : entourages_) require_same_carrier(n, e.size());
  dedup_stable(entourages_);
}

CoverBasis::CoverBasis(std::size_t n, std::vector<Cover> covers) : n_(n), covers_(std::move(covers)) {
  check_carrier_size(n);
  if (covers_.empty()) throw InvalidArgument("cover basis needs at least one cover");
  for (const auto& c : covers_) require_same_carrier(n, c.size());
  dedup_stable(covers_);
}

std::vector<Relation> intersection_closure(const DiagonalBasis& b) {
  const auto& gens = b.entourages();
  std::set<Relation> seen(gens.begin(), gens.end());
  std::vector<Relation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Relation> next;
    for (const auto& r : frontier) {
      for (const auto& g : gens) {
        auto meet = r & g;
        if (seen.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Relation minimum_entourage(const DiagonalBasis& b) {
  Relation out = Relation::full(b.size());
  for (const auto& e : b.entourages()) out = out & e;
  return out;
}

bool in_uniformity(const DiagonalBasis& b, const Relation& r) { return minimum_entourage(b).subset_of(r); }

ValidationReport validate_diagonal(const DiagonalBasis& b) {
  ValidationReport report;
  for (std::size_t i = 0; i < b.entourages().size(); ++i) {
    const auto& e = b.entourages()[i];
    if (!e.is_reflexive()) report.add("reflexive", {{"index", i}, {"entourage", to_json(e)}});
  }
  // E ⊆ E' implies inverse(E) ⊆ inverse(E') and E∘E ⊆ E'∘E', so the least
  // member of the closure is the best candidate E for every D.
  const auto least = minimum_entourage(b);
  const auto least_inverse = inverse(least);
  const auto least_square = compose(least, least);
  for (const auto& d : intersection_closure(b)) {
    if (!least_inverse.subset_of(d)) report.add("symmetric", {{"entourage", to_json(d)}});
    if (!least_square.subset_of(d)) report.add("half", {{"entourage", to_json(d)}});
  }
  return report;
}

DiagonalBasis normalize(const DiagonalBasis& b) {
  require_valid(b, "normalize");
  return DiagonalBasis(b.size(), {minimum_entourage(b)});
}

bool uniformity_equal(const DiagonalBasis& b1, const DiagonalBasis& b2) {
  require_same_carrier(b1.size(), b2.size());
  return normalize(b1) == normalize(b2);
}

NonArchimedeanVerdict is_non_archimedean(const DiagonalBasis& b) {
  require_valid(b, "is_non_archimedean");
  const auto closure = intersection_closure(b);
  std::vector<Relation> closed;
  closed.reserve(closure.size());
  for (const auto& d : closure) closed.push_back(eq_closure(d));

  std::vector<Relation> witness;
  for (const auto& d : closure) {
    auto it = std::find_if(closed.begin(), closed.end(), [&](const Relation& e) { return e.subset_of(d); });
    if (it == closed.end()) return {false, std::nullopt};
    witness.push_back(*it);
  }
  return {true, DiagonalBasis(b.size(), std::move(witness))};
}

Cover cover_of(const Relation& d) {
  std::vector<PointSet> slices;
  for (std::size_t x = 0; x < d.size(); ++x) slices.push_back(d.slice(x));
  return Cover(d.size(), std::move(slices));
}

CoverBasis cover_basis_from_diagonal(const DiagonalBasis& b) {
  require_valid(b, "cover_basis_from_diagonal");
  std::vector<Cover> covers;
  for (const auto& d : b.entourages()) covers.push_back(cover_of(d));
  for (const auto& d : intersection_closure(b)) covers.push_back(cover_of(d));
  return CoverBasis(b.size(), std::move(covers));
}

Relation relation_of(const Cover& u) {
  std::vector<PointSet> rows(u.size());
  for (auto s : u.sets()) {
    for (auto x : s.elements()) rows[x] = rows[x] | s;
  }
  return Relation::from_rows(std::move(rows));
}

DiagonalBasis diagonal_from_cover_basis(const CoverBasis& cb) {
  require_valid(cb, "diagonal_from_cover_basis");
  std::vector<Relation> entourages;
  for (const auto& u : cb.covers()) entourages.push_back(relation_of(u));
  return DiagonalBasis(cb.size(), std::move(entourages));
}

PointSet star(PointSet a, const Cover& u) {
  PointSet out;
  for (auto s : u.sets()) {
    if (s.intersects(a)) out = out | s;
  }
  return out;
}

bool star_refines(const Cover& v, const Cover& u) {
  require_same_carrier(v.size(), u.size());
  std::vector<PointSet> stars;
  for (auto s : v.sets()) stars.push_back(star(s, v));
  return refines(Cover(v.size(), std::move(stars)), u);
}

Cover cover_meet(const Cover& a, const Cover& b) {
  require_same_carrier(a.size(), b.size());
  std::vector<PointSet> sets;
  for (auto s : a.sets()) {
    for (auto t : b.sets()) {
      if (s.intersects(t)) sets.push_back(s & t);
    }
  }
  return Cover(a.size(), std::move(sets));
}

Cover cover_meet(const std::vector<Cover>& covers) {
  if (covers.empty()) throw InvalidArgument("cover_meet of an empty family");
  Cover out = covers.front();
  for (std::size_t i = 1; i < covers.size(); ++i) out = cover_meet(out, covers[i]);
  return out;
}

ValidationReport validate_cover(const CoverBasis& cb) {
  std::vector<Cover> candidates = cb.covers();
  std::vector<Cover> partitions;
  std::copy_if(cb.covers().begin(), cb.covers().end(), std::back_inserter(partitions),
               [](const Cover& c) { return c.is_partition(); });
  if (partitions.size() > 1) candidates.push_back(cover_meet(partitions));

  ValidationReport report;
  for (const auto& u : cb.covers()) {
    const bool ok = std::any_of(candidates.begin(), candidates.end(),
                                [&](const Cover& v) { return star_refines(v, u); });
    if (!ok) report.add("star_refinement", {{"cover", to_json(u)}});
  }
  return report;
}

PartitionBasisVerdict has_partition_basis(const CoverBasis& cb) {
  require_valid(cb, "has_partition_basis");
  std::vector<Cover> induced;
  for (const auto& v : cb.covers()) induced.emplace_back(to_partition(eq_closure(relation_of(v))));

  // A cover's own P_U is preferred, so a basis of partitions is its own witness.
  std::vector<Cover> witness;
  for (std::size_t i = 0; i < cb.covers().size(); ++i) {
    const auto& u = cb.covers()[i];
    if (refines(induced[i], u)) {
      witness.push_back(induced[i]);
      continue;
    }
    auto it = std::find_if(induced.begin(), induced.end(), [&](const Cover& p) { return refines(p, u); });
    if (it == induced.end()) return {false, std::nullopt};
    witness.push_back(*it);
  }
  return {true, CoverBasis(cb.size(), std::move(witness))};
}

bool covering_uniformity_equal(const CoverBasis& a, const CoverBasis& b) {
  require_same_carrier(a.size(), b.size());
  const auto finest_a = cover_meet(a.covers());
  const auto finest_b = cover_meet(b.covers());
  auto refined_by = [](const CoverBasis& cb, const Cover& finest) {
    return std::all_of(cb.covers().begin(), cb.covers().end(), [&](const Cover& u) { return refines(finest, u); });
  };
  return refined_by(a, finest_b) && refined_by(b, finest_a);
}

bool diagonal_roundtrip_holds(const DiagonalBasis& b) {
  return uniformity_equal(diagonal_from_cover_basis(cover_basis_from_diagonal(b)), b);
}

bool cover_roundtrip_holds(const CoverBasis& cb) {
  return covering_uniformity_equal(cover_basis_from_diagonal(diagonal_from_cover_basis(cb)), cb);
}

}  // namespace ultrauniform
