#include "ultrauniform/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "ultrauniform/io.hpp"

namespace ultrauniform::oracle {

namespace {

void require_at_most(std::size_t n, std::size_t limit, const char* what) {
  check_carrier_size(n);
  if (n > limit) {
    throw InvalidArgument(std::string(what) + " supports at most " + std::to_string(limit) + " points, got " +
                          std::to_string(n));
  }
}

void for_each_combination(std::size_t total, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= total; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::optional<StructureKind> parse_structure_kind(std::string_view text) {
  for (auto k : {StructureKind::topologies, StructureKind::partitions, StructureKind::equivalence_bases,
                 StructureKind::uniformities, StructureKind::valid_cover_bases}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::topologies: return "topologies";
    case StructureKind::partitions: return "partitions";
    case StructureKind::equivalence_bases: return "equivalence_bases";
    case StructureKind::uniformities: return "uniformities";
    case StructureKind::valid_cover_bases: return "valid_cover_bases";
  }
  return "";
}

// --- exhaustive families ----------------------------------------------------

std::vector<FiniteTopology> all_topologies(std::size_t n) {
  require_at_most(n, kMaxExhaustiveTopologyPoints, "topology enumeration");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t full = subsets - 1;
  // Subsets other than {} and X are indexed 1..subsets-2; family bit i-1 picks subset i.
  const std::uint64_t families = std::uint64_t{1} << (subsets - 2);
  std::vector<FiniteTopology> out;
  std::vector<std::uint64_t> members;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    auto has = [&](std::uint64_t s) { return s == 0 || s == full || ((fam >> (s - 1)) & 1U); };
    members.assign({0, full});
    for (std::uint64_t s = 1; s < full; ++s) {
      if ((fam >> (s - 1)) & 1U) members.push_back(s);
    }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!has(members[i] | members[j]) || !has(members[i] & members[j])) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<PointSet> opens;
    for (auto m : members) opens.emplace_back(m);
    out.emplace_back(n, std::move(opens));
  }
  return out;
}

std::vector<Partition> all_partitions(std::size_t n) {
  require_at_most(n, kMaxExhaustivePartitionPoints, "partition enumeration");
  std::vector<Partition> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<PointSet> sets(blocks);
      for (std::size_t x = 0; x < n; ++x) sets[label[x]].insert(x);
      out.emplace_back(n, std::move(sets));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Relation> all_equivalences(std::size_t n) {
  std::vector<Relation> out;
  for (const auto& p : all_partitions(n)) out.push_back(to_relation(p));
  return out;
}

std::vector<DiagonalBasis> equivalence_bases(std::size_t n, std::size_t max_generators) {
  require_at_most(n, kMaxExhaustiveBasisPoints, "equivalence basis enumeration");
  const auto eqs = all_equivalences(n);
  std::vector<DiagonalBasis> out;
  for (std::size_t k = 1; k <= std::min(max_generators, eqs.size()); ++k) {
    for_each_combination(eqs.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Relation> gens;
      for (auto i : idx) gens.push_back(eqs[i]);
      out.emplace_back(n, std::move(gens));
    });
  }
  return out;
}

std::vector<DiagonalBasis> all_uniformities(std::size_t n) {
  std::vector<DiagonalBasis> out;
  for (auto& e : all_equivalences(n)) out.emplace_back(n, std::vector{std::move(e)});
  return out;
}

std::vector<CoverBasis> valid_cover_bases(std::size_t n) {
  require_at_most(n, kMaxExhaustiveCoverPoints, "cover basis enumeration");
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;  // subsets 1..2^n-1
  std::vector<Cover> covers;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << nonempty); ++fam) {
    std::vector<PointSet> sets;
    PointSet covered;
    for (std::uint64_t s = 1; s <= nonempty; ++s) {
      if ((fam >> (s - 1)) & 1U) {
        sets.emplace_back(s);
        covered = covered | PointSet(s);
      }
    }
    if (covered == PointSet::full(n)) covers.emplace_back(n, std::move(sets));
  }
  std::vector<CoverBasis> out;
  auto keep_if_valid = [&](std::vector<Cover> cs) {
    CoverBasis cb(n, std::move(cs));
    if (validate_cover(cb).valid()) out.push_back(std::move(cb));
  };
  for (std::size_t i = 0; i < covers.size(); ++i) {
    keep_if_valid({covers[i]});
    for (std::size_t j = i + 1; j < covers.size(); ++j) keep_if_valid({covers[i], covers[j]});
  }
  return out;
}

// --- sampler ----------------------------------------------------------------

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Relation Sampler::equivalence(std::size_t n) {
  const auto blocks = uniform(1, n);
  std::vector<PointSet> sets(blocks);
  for (std::size_t x = 0; x < n; ++x) sets[uniform(0, blocks - 1)].insert(x);
  std::erase_if(sets, [](PointSet s) { return s.empty(); });
  return to_relation(Partition(n, std::move(sets)));
}

DiagonalBasis Sampler::equivalence_basis(std::size_t n, std::size_t max_generators) {
  const auto k = uniform(1, max_generators);
  std::vector<Relation> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(equivalence(n));
  return DiagonalBasis(n, std::move(gens));
}

DiagonalBasis Sampler::valid_basis(std::size_t n) {
  const auto least = equivalence(n);
  const auto k = uniform(1, 3);
  auto random_superset = [&](const Relation& base, const Relation& allowed) {
    Relation r = base;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (allowed.contains(x, y) && uniform(0, 2) == 0) r.insert(x, y);
      }
    }
    return r;
  };
  const auto everything = Relation::full(n);
  std::vector<Relation> gens;
  Relation meet = everything;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    gens.push_back(random_superset(least, everything));
    meet = meet & gens.back();
  }
  // The last generator only adds pairs outside the running intersection, so
  // the intersection of all generators is exactly `least`.
  Relation outside(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!meet.contains(x, y)) outside.insert(x, y);
    }
  }
  gens.push_back(k == 1 ? least : random_superset(least, outside));
  std::shuffle(gens.begin(), gens.end(), rng_);
  return DiagonalBasis(n, std::move(gens));
}

Pseudometric Sampler::na_pseudometric(std::size_t n) {
  const auto initial = to_partition(equivalence(n));
  std::vector<PointSet> clusters = initial.blocks();
  std::vector<Rational> dist(n * n);
  Rational height;
  while (clusters.size() > 1) {
    height += Rational(static_cast<std::int64_t>(uniform(1, 5)), static_cast<std::int64_t>(uniform(1, 4)));
    const auto i = uniform(0, clusters.size() - 1);
    auto j = uniform(0, clusters.size() - 2);
    if (j >= i) ++j;
    for (auto x : clusters[i].elements()) {
      for (auto y : clusters[j].elements()) {
        dist[x * n + y] = height;
        dist[y * n + x] = height;
      }
    }
    clusters[i] = clusters[i] | clusters[j];
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return Pseudometric(n, std::move(dist));
}

FiniteTopology Sampler::topology(std::size_t n) {
  require_at_most(n, kMaxSampledPoints, "random topology");
  std::set<PointSet> opens{PointSet{}, PointSet::full(n)};
  const auto seeds = uniform(1, 4);
  for (std::size_t i = 0; i < seeds; ++i) opens.insert(PointSet(rng_() & PointSet::full(n).bits()));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> current(opens.begin(), opens.end());
    for (auto a : current) {
      for (auto b : current) {
        grew |= opens.insert(a | b).second;
        grew |= opens.insert(a & b).second;
      }
    }
  }
  return FiniteTopology(n, {opens.begin(), opens.end()});
}

// --- chain facts ------------------------------------------------------------

bool chain_bounds_hold(const Chain& chain) {
  const auto d = chain_pm(chain);
  const auto n = chain.size();
  const auto depth = chain.depth();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& v = d(x, y);
      if (v != kZero && v.numerator() != 1) return false;
      for (std::size_t k = 1; k <= depth + 1; ++k) {
        const Rational inv_k(1, static_cast<std::int64_t>(k));
        if (chain.step(k).contains(x, y) && v > inv_k) return false;
        if (v < inv_k && !chain.step(k + 1).contains(x, y)) return false;
      }
    }
  }
  return true;
}

bool sup_bound_holds(std::span<const Chain> chains) {
  if (chains.empty()) return true;
  std::vector<Pseudometric> metrics;
  std::size_t depth = 0;
  for (const auto& c : chains) {
    metrics.push_back(chain_pm(c));
    depth = std::max(depth, c.depth());
  }
  const auto d = sup_pm(metrics);
  const auto n = d.size();
  for (std::size_t k = 1; k <= depth + 1; ++k) {
    Relation meet = Relation::full(n);
    for (const auto& c : chains) meet = meet & c.step(k);
    for (const auto& [x, y] : meet.pairs()) {
      if (d(x, y) > Rational(1, static_cast<std::int64_t>(k))) return false;
    }
  }
  return true;
}

// --- sweeps -----------------------------------------------------------------

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (auto id : {TheoremId::t2_4, TheoremId::t3_2, TheoremId::t4_1, TheoremId::r2_1_roundtrip}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::t2_4: return "T2.4";
    case TheoremId::t3_2: return "T3.2";
    case TheoremId::t4_1: return "T4.1";
    case TheoremId::r2_1_roundtrip: return "R2.1-roundtrip";
  }
  return "";
}

EnumerationSpec default_spec(TheoremId id, std::size_t n) {
  EnumerationSpec spec;
  spec.n = n;
  switch (id) {
    case TheoremId::t3_2: spec.kind = StructureKind::topologies; break;
    case TheoremId::t2_4:
    case TheoremId::t4_1: spec.kind = StructureKind::equivalence_bases; break;
    case TheoremId::r2_1_roundtrip: spec.kind = StructureKind::uniformities; break;
  }
  return spec;
}

std::vector<Structure> enumerate(const EnumerationSpec& spec) {
  std::vector<Structure> out;
  if (spec.samples == 0) {
    auto append = [&](auto items) {
      for (auto& item : items) out.emplace_back(std::move(item));
    };
    switch (spec.kind) {
      case StructureKind::topologies: append(all_topologies(spec.n)); break;
      case StructureKind::partitions: append(all_partitions(spec.n)); break;
      case StructureKind::equivalence_bases: append(equivalence_bases(spec.n, spec.max_generators)); break;
      case StructureKind::uniformities: append(all_uniformities(spec.n)); break;
      case StructureKind::valid_cover_bases: append(valid_cover_bases(spec.n)); break;
    }
    return out;
  }
  require_at_most(spec.n, kMaxSampledPoints, "sampled enumeration");
  Sampler sampler(spec.seed);
  for (std::size_t i = 0; i < spec.samples; ++i) {
    const auto n = sampler.carrier_size(spec.n);
    switch (spec.kind) {
      case StructureKind::topologies: out.emplace_back(sampler.topology(n)); break;
      case StructureKind::partitions: out.emplace_back(to_partition(sampler.equivalence(n))); break;
      case StructureKind::equivalence_bases: out.emplace_back(sampler.equivalence_basis(n, spec.max_generators)); break;
      case StructureKind::uniformities: out.emplace_back(sampler.valid_basis(n)); break;
      case StructureKind::valid_cover_bases: out.emplace_back(cover_basis_from_diagonal(sampler.valid_basis(n))); break;
    }
  }
  return out;
}

namespace {

// Name of the first failed check, or empty when the instance passes.
using Check = std::function<std::string(const Structure&, bool& satisfying)>;

json instance_json(const Structure& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

std::string check_t3_2(const FiniteTopology& t, bool& satisfying) {
  const bool ta = satisfies_ta(t).holds;
  const bool zero_dim = is_zero_dimensional(t);
  const bool uniformizable = is_uniformizable_na(t).uniformizable;
  satisfying = ta && zero_dim && uniformizable;
  if (ta != zero_dim || ta != uniformizable) return "verdicts disagree";
  return {};
}

std::string check_t2_4(const DiagonalBasis& b, bool& satisfying) {
  satisfying = false;
  if (!is_non_archimedean(b).non_archimedean) return "(A) is_non_archimedean";
  const auto system = system_from_na_basis(b);
  if (!std::all_of(system.metrics().begin(), system.metrics().end(), [](const auto& d) { return is_na(d); })) {
    return "A->B generated metric not non-Archimedean";
  }
  const auto induced = basis_from_system(system);
  if (!uniformity_equal(induced, b)) return "A->B induced uniformity differs";
  const auto covers = cover_basis_from_diagonal(b);
  const auto partitions = has_partition_basis(covers);
  if (!partitions.has_partition_basis) return "A->C no partition basis";
  for (const auto& c : partitions.witness->covers()) {
    if (!c.is_partition()) return "A->C witness is not a partition";
  }
  if (!covering_uniformity_equal(*partitions.witness, covers)) return "A->C witness generates another uniformity";
  if (!is_non_archimedean(induced).non_archimedean) return "B->A";
  const auto joined = PseudometricSystem(b.size(), {sup_pm(system.metrics())});
  if (!is_non_archimedean(basis_from_system(joined)).non_archimedean) return "B->A (sup)";
  satisfying = true;
  return {};
}

std::string check_t4_1(const DiagonalBasis& b, bool& satisfying) {
  satisfying = false;
  const auto& es = b.entourages();
  const auto chain = metrization_chain(es);
  const auto d = chain_pm(chain);
  if (!is_na(d)) return "metrize output not non-Archimedean";
  auto with_full = es;
  with_full.push_back(Relation::full(b.size()));
  if (!uniformity_equal(basis_from_system(PseudometricSystem(b.size(), {d})), DiagonalBasis(b.size(), with_full))) {
    return "(B)<->(A) induced uniformity differs";
  }
  if (!chain_bounds_hold(chain)) return "chain bounds (metrization chain)";
  std::vector<Chain> constant_chains;
  for (const auto& e : es) constant_chains.emplace_back(b.size(), std::vector{Relation::full(b.size()), e});
  for (const auto& c : constant_chains) {
    if (!chain_bounds_hold(c)) return "chain bounds (step i)";
  }
  constant_chains.push_back(chain);
  if (!sup_bound_holds(constant_chains)) return "sup bound (step ii)";
  satisfying = true;
  return {};
}

std::string check_roundtrip(const Structure& s, bool& satisfying) {
  satisfying = false;
  if (const auto* b = std::get_if<DiagonalBasis>(&s)) {
    if (!diagonal_roundtrip_holds(*b)) return "diagonal->cover->diagonal";
    if (!cover_roundtrip_holds(cover_basis_from_diagonal(*b))) return "cover->diagonal->cover";
  } else if (const auto* cb = std::get_if<CoverBasis>(&s)) {
    if (!cover_roundtrip_holds(*cb)) return "cover->diagonal->cover";
    if (!diagonal_roundtrip_holds(diagonal_from_cover_basis(*cb))) return "diagonal->cover->diagonal";
  }
  satisfying = true;
  return {};
}

}  // namespace

SweepReport theorem_sweep(TheoremId id, const EnumerationSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  auto kind_error = [&] {
    return InvalidArgument(std::string(to_string(id)) + " cannot be swept over " + std::string(to_string(spec.kind)));
  };
  switch (id) {
    case TheoremId::t3_2:
      if (spec.kind != StructureKind::topologies) throw kind_error();
      check = [](const Structure& s, bool& ok) { return check_t3_2(std::get<FiniteTopology>(s), ok); };
      break;
    case TheoremId::t2_4:
      if (spec.kind != StructureKind::equivalence_bases) throw kind_error();
      check = [](const Structure& s, bool& ok) { return check_t2_4(std::get<DiagonalBasis>(s), ok); };
      break;
    case TheoremId::t4_1:
      if (spec.kind != StructureKind::equivalence_bases) throw kind_error();
      check = [](const Structure& s, bool& ok) { return check_t4_1(std::get<DiagonalBasis>(s), ok); };
      break;
    case TheoremId::r2_1_roundtrip:
      if (spec.kind != StructureKind::uniformities && spec.kind != StructureKind::valid_cover_bases) throw kind_error();
      check = check_roundtrip;
      break;
  }

  SweepReport report;
  report.theorem = std::string(to_string(id));
  report.n = spec.n;
  if (spec.samples > 0) report.seed = spec.seed;
  for (const auto& instance : enumerate(spec)) {
    bool satisfying = false;
    const auto failure = check(instance, satisfying);
    ++report.checked;
    if (satisfying) ++report.satisfying;
    if (!failure.empty()) {
      ++report.discrepancies;
      if (report.first_counterexample.is_null()) {
        report.first_counterexample = {{"check", failure}, {"instance", instance_json(instance)}};
      }
    }
  }
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const SweepReport& report) {
  return {{"theorem", report.theorem},
          {"n", report.n},
          {"checked", report.checked},
          {"satisfying", report.satisfying},
          {"discrepancies", report.discrepancies},
          {"first_counterexample", report.first_counterexample},
          {"seed", report.seed ? json(*report.seed) : json(nullptr)},
          {"ms", report.ms}};
}

}  // namespace ultrauniform::oracle
