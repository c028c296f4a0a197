#include "ultrauniform/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ultrauniform {

void check_carrier_size(std::size_t n) {
  if (n < 1 || n > kMaxPoints) {
    throw InvalidArgument("carrier size must be in 1.." + std::to_string(kMaxPoints) + ", got " +
                          std::to_string(n));
  }
}

void Carrier::check() const {
  check_carrier_size(n);
  if (!labels) return;
  if (labels->size() != n) throw InvalidArgument("label count does not match carrier size");
  std::set<std::string> seen(labels->begin(), labels->end());
  if (seen.size() != n) throw InvalidArgument("carrier labels must be pairwise distinct");
}

namespace {

void check_point(std::size_t n, std::size_t x) {
  if (x >= n) {
    throw InvalidArgument("point " + std::to_string(x) + " outside carrier of size " + std::to_string(n));
  }
}

void check_subset(std::size_t n, PointSet s) {
  if (!s.subset_of(PointSet::full(n))) throw InvalidArgument("subset leaves the carrier");
}

}  // namespace

// --- Relation ---------------------------------------------------------------

Relation::Relation(std::size_t n) : rows_(n) { check_carrier_size(n); }

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) r.rows_[x] = PointSet::singleton(x);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  std::fill(r.rows_.begin(), r.rows_.end(), PointSet::full(n));
  return r;
}

Relation Relation::from_rows(std::vector<PointSet> rows) {
  Relation r(rows.size());
  for (auto row : rows) check_subset(r.size(), row);
  r.rows_ = std::move(rows);
  return r;
}

Relation Relation::from_pairs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Relation r(n);
  for (const auto& [x, y] : pairs) r.insert(x, y);
  return r;
}

void Relation::insert(std::size_t x, std::size_t y) {
  check_point(size(), x);
  check_point(size(), y);
  rows_[x].insert(y);
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto row : rows_) c += row.size();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto y : rows_[x].elements()) out.emplace_back(x, y);
  }
  return out;
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!rows_[x].contains(x)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const { return *this == inverse(*this); }

bool Relation::is_transitive() const { return compose(*this, *this).subset_of(*this); }

bool Relation::subset_of(const Relation& other) const {
  require_same_carrier(size(), other.size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  }
  return true;
}

Relation operator&(const Relation& a, const Relation& b) {
  require_same_carrier(a.size(), b.size());
  Relation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out.rows_[x] = a.rows_[x] & b.rows_[x];
  return out;
}

Relation operator|(const Relation& a, const Relation& b) {
  require_same_carrier(a.size(), b.size());
  Relation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out.rows_[x] = a.rows_[x] | b.rows_[x];
  return out;
}

// --- Partition --------------------------------------------------------------

Partition::Partition(std::size_t n, std::vector<PointSet> blocks) : n_(n), blocks_(std::move(blocks)) {
  check_carrier_size(n);
  PointSet seen;
  for (auto b : blocks_) {
    if (b.empty()) throw InvalidArgument("partition block is empty");
    check_subset(n, b);
    if (b.intersects(seen)) throw InvalidArgument("partition blocks overlap");
    seen = seen | b;
  }
  if (seen != PointSet::full(n)) throw InvalidArgument("partition blocks do not cover the carrier");
  std::sort(blocks_.begin(), blocks_.end(), [](PointSet a, PointSet b) { return a.min() < b.min(); });
}

Partition::Partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks)
    : Partition(n, [&] {
        std::vector<PointSet> sets;
        for (const auto& b : blocks) sets.push_back(set_from_indices(n, b));
        return sets;
      }()) {}

Partition Partition::discrete(std::size_t n) {
  std::vector<PointSet> blocks;
  for (std::size_t x = 0; x < n; ++x) blocks.push_back(PointSet::singleton(x));
  return Partition(n, std::move(blocks));
}

Partition Partition::indiscrete(std::size_t n) { return Partition(n, std::vector{PointSet::full(n)}); }

PointSet Partition::block_of(std::size_t x) const {
  check_point(n_, x);
  for (auto b : blocks_) {
    if (b.contains(x)) return b;
  }
  return {};
}

// --- Cover ------------------------------------------------------------------

Cover::Cover(std::size_t n, std::vector<PointSet> sets) : n_(n), sets_(std::move(sets)) {
  check_carrier_size(n);
  PointSet seen;
  for (auto s : sets_) {
    if (s.empty()) throw InvalidArgument("cover member is empty");
    check_subset(n, s);
    seen = seen | s;
  }
  if (seen != PointSet::full(n)) throw InvalidArgument("cover does not cover the carrier");
  std::sort(sets_.begin(), sets_.end(), lex_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

Cover::Cover(std::size_t n, const std::vector<std::vector<std::size_t>>& sets)
    : Cover(n, [&] {
        std::vector<PointSet> out;
        for (const auto& s : sets) out.push_back(set_from_indices(n, s));
        return out;
      }()) {}

Cover::Cover(const Partition& p) : Cover(p.size(), p.blocks()) {}

bool Cover::is_partition() const {
  PointSet seen;
  for (auto s : sets_) {
    if (s.intersects(seen)) return false;
    seen = seen | s;
  }
  return true;
}

// --- UnionFind --------------------------------------------------------------

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

// --- operations -------------------------------------------------------------

PointSet set_from_indices(std::size_t n, std::span<const std::size_t> indices) {
  PointSet s;
  for (auto i : indices) {
    check_point(n, i);
    s.insert(i);
  }
  return s;
}

Relation compose(const Relation& r, const Relation& s) {
  require_same_carrier(r.size(), s.size());
  std::vector<PointSet> rows(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (auto z : r.slice(x).elements()) rows[x] = rows[x] | s.slice(z);
  }
  return Relation::from_rows(std::move(rows));
}

Relation inverse(const Relation& r) {
  Relation out(r.size());
  for (const auto& [x, y] : r.pairs()) out.insert(y, x);
  return out;
}

bool is_equivalence(const Relation& r) { return r.is_reflexive() && r.is_symmetric() && r.is_transitive(); }

Relation eq_closure(const Relation& r) {
  const auto n = r.size();
  UnionFind uf(n);
  for (const auto& [x, y] : r.pairs()) uf.unite(x, y);
  std::vector<PointSet> classes(n);
  for (std::size_t x = 0; x < n; ++x) classes[uf.find(x)].insert(x);
  Relation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : classes[uf.find(x)].elements()) out.insert(x, y);
  }
  return out;
}

Partition to_partition(const Relation& e) {
  if (!is_equivalence(e)) throw PreconditionFailed("to_partition: relation is not an equivalence");
  std::vector<PointSet> blocks;
  PointSet seen;
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (seen.contains(x)) continue;
    blocks.push_back(e.slice(x));
    seen = seen | e.slice(x);
  }
  return Partition(e.size(), std::move(blocks));
}

Relation to_relation(const Partition& p) {
  Relation out(p.size());
  for (auto b : p.blocks()) {
    for (auto x : b.elements()) {
      for (auto y : b.elements()) out.insert(x, y);
    }
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_carrier(p.size(), q.size());
  return to_partition(to_relation(p) & to_relation(q));
}

bool refines(const Cover& fine, const Cover& coarse) {
  require_same_carrier(fine.size(), coarse.size());
  return std::all_of(fine.sets().begin(), fine.sets().end(), [&](PointSet a) {
    return std::any_of(coarse.sets().begin(), coarse.sets().end(), [a](PointSet b) { return a.subset_of(b); });
  });
}

bool refines(const Partition& fine, const Cover& coarse) { return refines(Cover(fine), coarse); }

}  // namespace ultrauniform
