#include "ultrauniform/io.hpp"

#include <charconv>

namespace ultrauniform {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(path, key), "missing");
  return *it;
}

const json& array_field(const json& j, const std::string& path, const std::string& key) {
  const auto& a = field(j, path, key);
  if (!a.is_array()) throw InputError(child(path, key), "expected an array");
  return a;
}

std::size_t read_index(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InputError(path, "expected a nonnegative integer");
  const auto v = j.get<std::size_t>();
  if (v >= n) throw InputError(path, "point " + std::to_string(v) + " outside carrier of size " + std::to_string(n));
  return v;
}

PointSet read_set(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) throw InputError(path, "expected an array of points");
  PointSet s;
  for (std::size_t i = 0; i < j.size(); ++i) s.insert(read_index(j[i], child(path, i), n));
  return s;
}

std::vector<PointSet> read_sets(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) throw InputError(path, "expected an array of point lists");
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < j.size(); ++i) sets.push_back(read_set(j[i], child(path, i), n));
  return sets;
}

// Runs a constructor and reports structural failures against `path`.
template <typename F>
auto build(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path.empty() ? "/" : path, e.what());
  }
}

json sets_to_json(const std::vector<PointSet>& sets) {
  json out = json::array();
  for (auto s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

json to_json(PointSet s) { return s.elements(); }

json to_json(const Relation& r) {
  json pairs = json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  return {{"n", r.size()}, {"pairs", pairs}};
}

json to_json(const Partition& p) { return {{"n", p.size()}, {"blocks", sets_to_json(p.blocks())}}; }

json to_json(const Cover& c) { return sets_to_json(c.sets()); }

json to_json(const DiagonalBasis& b) {
  json entourages = json::array();
  for (const auto& e : b.entourages()) entourages.push_back(to_json(e));
  return {{"n", b.size()}, {"entourages", entourages}};
}

json to_json(const CoverBasis& cb) {
  json covers = json::array();
  for (const auto& c : cb.covers()) covers.push_back(to_json(c));
  return {{"n", cb.size()}, {"covers", covers}};
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return {{"valid", report.valid()}, {"violations", violations}};
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

json to_json(const Pseudometric& d) {
  json rows = json::array();
  for (std::size_t x = 0; x < d.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < d.size(); ++y) row.push_back(format_rational(d(x, y)));
    rows.push_back(row);
  }
  return {{"n", d.size()}, {"dist", rows}};
}

json to_json(const PseudometricSystem& m) {
  json metrics = json::array();
  for (const auto& d : m.metrics()) metrics.push_back(to_json(d));
  return {{"n", m.size()}, {"metrics", metrics}};
}

json to_json(const Chain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps()) steps.push_back(to_json(s));
  return {{"n", chain.size()}, {"steps", steps}};
}

json to_json(const FiniteTopology& t) { return {{"n", t.size()}, {"opens", sets_to_json(t.opens())}}; }

Carrier carrier_from_json(const json& j, const std::string& path) {
  const auto& n = field(j, path, "n");
  if (!n.is_number_integer()) throw InputError(child(path, "n"), "expected an integer");
  Carrier carrier;
  const auto value = n.get<std::int64_t>();
  if (value < 1 || value > static_cast<std::int64_t>(kMaxPoints)) {
    throw InputError(child(path, "n"), "carrier size must be in 1.." + std::to_string(kMaxPoints));
  }
  carrier.n = static_cast<std::size_t>(value);
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw InputError(child(path, "labels"), "expected an array of strings");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw InputError(child(child(path, "labels"), i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    carrier.labels = std::move(labels);
  }
  build(child(path, "labels"), [&] {
    carrier.check();
    return 0;
  });
  return carrier;
}

Relation relation_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& pairs = array_field(j, path, "pairs");
  Relation r(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto p = child(child(path, "pairs"), i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw InputError(p, "expected a pair [i, j]");
    r.insert(read_index(pairs[i][0], child(p, 0), n), read_index(pairs[i][1], child(p, 1), n));
  }
  return r;
}

Partition partition_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  auto blocks = read_sets(array_field(j, path, "blocks"), child(path, "blocks"), n);
  return build(child(path, "blocks"), [&] { return Partition(n, std::move(blocks)); });
}

DiagonalBasis diagonal_basis_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& list = array_field(j, path, "entourages");
  std::vector<Relation> entourages;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto p = child(child(path, "entourages"), i);
    entourages.push_back(relation_from_json(list[i], p));
    if (entourages.back().size() != n) throw InputError(child(p, "n"), "carrier differs from the basis");
  }
  return build(child(path, "entourages"), [&] { return DiagonalBasis(n, std::move(entourages)); });
}

CoverBasis cover_basis_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& list = array_field(j, path, "covers");
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto p = child(child(path, "covers"), i);
    auto sets = read_sets(list[i], p, n);
    covers.push_back(build(p, [&] { return Cover(n, std::move(sets)); }));
  }
  return build(child(path, "covers"), [&] { return CoverBasis(n, std::move(covers)); });
}

Pseudometric pseudometric_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& rows = array_field(j, path, "dist");
  if (rows.size() != n) throw InputError(child(path, "dist"), "expected " + std::to_string(n) + " rows");
  std::vector<Rational> dist;
  for (std::size_t x = 0; x < n; ++x) {
    const auto rp = child(child(path, "dist"), x);
    if (!rows[x].is_array() || rows[x].size() != n) throw InputError(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y) {
      const auto& cell = rows[x][y];
      const auto cp = child(rp, y);
      if (cell.is_number_integer()) {
        dist.emplace_back(cell.get<std::int64_t>());
      } else if (cell.is_string()) {
        dist.push_back(build(cp, [&] { return parse_rational(cell.get<std::string>()); }));
      } else {
        throw InputError(cp, "expected a rational string \"p/q\"");
      }
    }
  }
  return build(child(path, "dist"), [&] { return Pseudometric(n, std::move(dist)); });
}

PseudometricSystem pseudometric_system_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& list = array_field(j, path, "metrics");
  std::vector<Pseudometric> metrics;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto p = child(child(path, "metrics"), i);
    metrics.push_back(pseudometric_from_json(list[i], p));
    if (metrics.back().size() != n) throw InputError(child(p, "n"), "carrier differs from the system");
  }
  return build(child(path, "metrics"), [&] { return PseudometricSystem(n, std::move(metrics)); });
}

Chain chain_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  const auto& list = array_field(j, path, "steps");
  std::vector<Relation> steps;
  for (std::size_t i = 0; i < list.size(); ++i) {
    steps.push_back(relation_from_json(list[i], child(child(path, "steps"), i)));
  }
  return build(child(path, "steps"), [&] { return Chain(n, std::move(steps)); });
}

FiniteTopology topology_from_json(const json& j, const std::string& path) {
  const auto n = carrier_from_json(j, path).n;
  auto opens = read_sets(array_field(j, path, "opens"), child(path, "opens"), n);
  return FiniteTopology(n, std::move(opens));
}

EncodedKind detect_kind(const json& j) {
  if (!j.is_object()) throw InputError("/", "expected a JSON object");
  if (j.contains("entourages")) return EncodedKind::diagonal_basis;
  if (j.contains("covers")) return EncodedKind::cover_basis;
  if (j.contains("opens")) return EncodedKind::topology;
  if (j.contains("dist")) return EncodedKind::pseudometric;
  if (j.contains("metrics")) return EncodedKind::pseudometric_system;
  if (j.contains("steps")) return EncodedKind::chain;
  if (j.contains("blocks")) return EncodedKind::partition;
  if (j.contains("pairs")) return EncodedKind::relation;
  throw InputError("/", "cannot tell which structure this is (no entourages/covers/opens/dist/metrics/steps/blocks/pairs)");
}

}  // namespace ultrauniform
