#include "ultrauniform/topology.hpp"

#include <algorithm>

#include "ultrauniform/io.hpp"

namespace ultrauniform {

namespace {

bool size_then_lex(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

void require_valid(const FiniteTopology& t, const char* op) {
  auto report = validate_topology(t);
  if (!report.valid()) throw PreconditionFailed(std::string(op) + ": not a topology", std::move(report));
}

// Partition topologies beyond this many blocks are not enumerated.
constexpr std::size_t kMaxTopologyBlocks = 20;

}  // namespace

FiniteTopology::FiniteTopology(std::size_t n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens)) {
  check_carrier_size(n);
  for (auto s : opens_) {
    if (!s.subset_of(PointSet::full(n))) throw InvalidArgument("open set leaves the carrier");
  }
  std::sort(opens_.begin(), opens_.end(), size_then_lex);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

FiniteTopology FiniteTopology::discrete(std::size_t n) { return partition_topology(Partition::discrete(n)); }

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
  return FiniteTopology(n, {PointSet{}, PointSet::full(n)});
}

bool FiniteTopology::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, size_then_lex);
}

ValidationReport validate_topology(const FiniteTopology& t) {
  ValidationReport report;
  if (!t.is_open(PointSet{})) report.add("contains_empty", nullptr);
  if (!t.is_open(PointSet::full(t.size()))) report.add("contains_carrier", nullptr);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const nlohmann::json pair = {to_json(opens[i]), to_json(opens[j])};
      if (!t.is_open(opens[i] | opens[j])) report.add("union_closed", pair);
      if (!t.is_open(opens[i] & opens[j])) report.add("intersection_closed", pair);
    }
  }
  return report;
}

std::vector<PointSet> clopen_sets(const FiniteTopology& t) {
  require_valid(t, "clopen_sets");
  std::vector<PointSet> out;
  std::copy_if(t.opens().begin(), t.opens().end(), std::back_inserter(out),
               [&](PointSet s) { return t.is_closed(s); });
  return out;
}

bool is_zero_dimensional(const FiniteTopology& t) {
  const auto clopens = clopen_sets(t);
  return std::all_of(t.opens().begin(), t.opens().end(), [&](PointSet open) {
    PointSet covered;
    for (auto c : clopens) {
      if (c.subset_of(open)) covered = covered | c;
    }
    return covered == open;
  });
}

SeparationVerdict satisfies_ta(const FiniteTopology& t) {
  const auto clopens = clopen_sets(t);
  const auto n = t.size();
  for (auto open : t.opens()) {
    const auto closed = open.complement(n);
    for (auto x : open.elements()) {
      const bool separated = std::any_of(clopens.begin(), clopens.end(),
                                         [&](PointSet u) { return u.contains(x) && !u.intersects(closed); });
      if (!separated) return {false, std::pair{closed, x}};
    }
  }
  return {true, std::nullopt};
}

bool is_continuous(const BinaryMap& f, const FiniteTopology& t) {
  require_same_carrier(f.n, t.size());
  return t.is_open(f.ones) && t.is_open(f.ones.complement(t.size()));
}

std::vector<BinaryMap> continuous_binary_maps(const FiniteTopology& t) {
  std::vector<BinaryMap> maps;
  for (auto c : clopen_sets(t)) maps.push_back({t.size(), c});
  return maps;
}

DiagonalBasis uniformity_from_binary_maps(std::span<const BinaryMap> maps) {
  if (maps.empty()) throw InvalidArgument("uniformity_from_binary_maps needs at least one map");
  const auto n = maps.front().n;
  std::vector<Relation> fibres;
  for (const auto& f : maps) {
    require_same_carrier(n, f.n);
    fibres.push_back(to_relation(Partition(n, [&] {
      std::vector<PointSet> blocks;
      if (!f.ones.empty()) blocks.push_back(f.ones);
      if (f.ones != PointSet::full(n)) blocks.push_back(f.ones.complement(n));
      return blocks;
    }())));
  }
  return DiagonalBasis(n, intersection_closure(DiagonalBasis(n, std::move(fibres))));
}

FiniteTopology partition_topology(const Partition& p) {
  const auto& blocks = p.blocks();
  if (blocks.size() > kMaxTopologyBlocks) throw InvalidArgument("partition has too many blocks to list its topology");
  std::vector<PointSet> opens;
  opens.reserve(std::size_t{1} << blocks.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
    PointSet open;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if ((mask >> i) & 1U) open = open | blocks[i];
    }
    opens.push_back(open);
  }
  return FiniteTopology(p.size(), std::move(opens));
}

FiniteTopology induced_topology(const DiagonalBasis& b) {
  return partition_topology(to_partition(normalize(b).entourages().front()));
}

UniformizabilityVerdict is_uniformizable_na(const FiniteTopology& t) {
  const auto maps = continuous_binary_maps(t);
  auto basis = uniformity_from_binary_maps(maps);
  if (induced_topology(basis) != t) return {false, std::nullopt};
  return {true, std::move(basis)};
}

}  // namespace ultrauniform
