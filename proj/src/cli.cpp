#include "ultrauniform/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ultrauniform/io.hpp"
#include "ultrauniform/oracle.hpp"

namespace ultrauniform::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string to;
  std::string positional;
  std::string kind;
  std::optional<std::uint64_t> seed;
  std::size_t n = 3;
  std::size_t trials = 0;
  std::size_t max_generators = 3;
  std::int64_t p = 2;
  std::size_t size = 8;
  std::size_t modulus = 27;
  std::int64_t ideal = 3;
  std::size_t depth = 3;
};

/// Precondition failure carrying a report for the caller.
struct Failure {
  std::string message;
  std::optional<ValidationReport> report;
};

json read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.in.empty() || opt.in == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (opt.in.front() == '{') {
    text = opt.in;
  } else {
    std::ifstream file(opt.in);
    if (!file) throw InputError("--in", "cannot open '" + opt.in + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("/", std::string("malformed JSON: ") + e.what());
  }
}

std::uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("ULTRAUNIFORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("ULTRAUNIFORM_SEED", "expected an unsigned integer");
    }
  }
  return oracle::kDefaultSeed;
}

Pseudometric padic_metric(std::int64_t p, std::size_t size) {
  if (p < 2) throw InputError("--p", "must be at least 2");
  check_carrier_size(size);
  std::vector<Rational> dist(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if (x == y) continue;
      auto diff = static_cast<std::int64_t>(x > y ? x - y : y - x);
      std::int64_t scale = 1;
      while (diff % p == 0) {
        diff /= p;
        scale *= p;
      }
      dist[x * size + y] = Rational(1, scale);
    }
  }
  return Pseudometric(size, std::move(dist));
}

DiagonalBasis ideal_chain(std::size_t modulus, std::int64_t ideal, std::size_t depth) {
  if (modulus < 1 || modulus > kMaxPoints) throw InputError("--modulus", "must be in 1.." + std::to_string(kMaxPoints));
  if (ideal < 1) throw InputError("--ideal", "must be positive");
  std::vector<Relation> congruences;
  std::int64_t q = 1;
  for (std::size_t k = 0; k <= depth; ++k, q *= ideal) {
    if (static_cast<std::int64_t>(modulus) % q != 0) {
      throw InputError("--depth", "ideal^" + std::to_string(k) + " does not divide the modulus");
    }
    Relation r(modulus);
    for (std::size_t x = 0; x < modulus; ++x) {
      for (std::size_t y = 0; y < modulus; ++y) {
        if ((static_cast<std::int64_t>(x) - static_cast<std::int64_t>(y)) % q == 0) r.insert(x, y);
      }
    }
    congruences.push_back(std::move(r));
  }
  return DiagonalBasis(modulus, std::move(congruences));
}

json failure_json(const Failure& f) {
  json j = {{"error", f.message}};
  if (f.report) j["report"] = to_json(*f.report);
  return j;
}

// Each verb returns its JSON result and exit code.
struct Result {
  json body;
  int code = kExitTrue;
};

int verdict(bool b) { return b ? kExitTrue : kExitFalse; }

Result do_validate(const json& input) {
  ValidationReport report;
  switch (detect_kind(input)) {
    case EncodedKind::diagonal_basis: report = validate_diagonal(diagonal_basis_from_json(input)); break;
    case EncodedKind::cover_basis: report = validate_cover(cover_basis_from_json(input)); break;
    case EncodedKind::topology: report = validate_topology(topology_from_json(input)); break;
    case EncodedKind::pseudometric: pseudometric_from_json(input); break;
    case EncodedKind::pseudometric_system: pseudometric_system_from_json(input); break;
    case EncodedKind::chain: chain_from_json(input); break;
    case EncodedKind::partition: partition_from_json(input); break;
    case EncodedKind::relation: relation_from_json(input); break;
  }
  return {to_json(report), verdict(report.valid())};
}

Result do_convert(const json& input, const std::string& to) {
  const auto kind = detect_kind(input);
  if (to == "cover") {
    if (kind == EncodedKind::cover_basis) return {to_json(cover_basis_from_json(input))};
    auto basis = [&] {
      if (kind == EncodedKind::pseudometric_system) return basis_from_system(pseudometric_system_from_json(input));
      if (kind == EncodedKind::pseudometric) {
        auto d = pseudometric_from_json(input);
        return basis_from_system(PseudometricSystem(d.size(), {d}));
      }
      return diagonal_basis_from_json(input);
    };
    return {to_json(cover_basis_from_diagonal(basis()))};
  }
  if (to == "diagonal") {
    switch (kind) {
      case EncodedKind::cover_basis: return {to_json(diagonal_from_cover_basis(cover_basis_from_json(input)))};
      case EncodedKind::pseudometric_system: return {to_json(basis_from_system(pseudometric_system_from_json(input)))};
      case EncodedKind::pseudometric: {
        auto d = pseudometric_from_json(input);
        return {to_json(basis_from_system(PseudometricSystem(d.size(), {d})))};
      }
      default: return {to_json(diagonal_basis_from_json(input))};
    }
  }
  throw InputError("--to", "expected 'cover' or 'diagonal'");
}

Result do_check_na(const json& input) {
  switch (detect_kind(input)) {
    case EncodedKind::cover_basis: {
      auto v = has_partition_basis(cover_basis_from_json(input));
      return {{{"partition_basis", v.has_partition_basis}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}},
              verdict(v.has_partition_basis)};
    }
    case EncodedKind::pseudometric: {
      const bool na = is_na(pseudometric_from_json(input));
      return {{{"non_archimedean", na}}, verdict(na)};
    }
    case EncodedKind::pseudometric_system: {
      const auto m = pseudometric_system_from_json(input);
      const bool na = std::all_of(m.metrics().begin(), m.metrics().end(), [](const auto& d) { return is_na(d); });
      return {{{"non_archimedean", na}}, verdict(na)};
    }
    default: {
      auto v = is_non_archimedean(diagonal_basis_from_json(input));
      return {{{"non_archimedean", v.non_archimedean}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}},
              verdict(v.non_archimedean)};
    }
  }
}

Result do_topo_check(const json& input) {
  const auto t = topology_from_json(input);
  const bool ta = satisfies_ta(t).holds;
  const bool zero_dim = is_zero_dimensional(t);
  const bool uniformizable = is_uniformizable_na(t).uniformizable;
  return {{{"T_A", ta}, {"zero_dim", zero_dim}, {"uniformizable", uniformizable}},
          verdict(ta && zero_dim && uniformizable)};
}

Result do_roundtrip(const json& input) {
  if (detect_kind(input) == EncodedKind::cover_basis) {
    const auto cb = cover_basis_from_json(input);
    auto back = cover_basis_from_diagonal(diagonal_from_cover_basis(cb));
    const bool ok = covering_uniformity_equal(back, cb);
    return {{{"roundtrip", ok}, {"result", to_json(back)}}, verdict(ok)};
  }
  const auto b = diagonal_basis_from_json(input);
  auto back = diagonal_from_cover_basis(cover_basis_from_diagonal(b));
  const bool ok = uniformity_equal(back, b);
  return {{{"roundtrip", ok}, {"result", to_json(back)}}, verdict(ok)};
}

Result do_sweep(const Options& opt) {
  const auto id = oracle::parse_theorem_id(opt.positional);
  if (!id) throw InputError("theorem", "unknown theorem id '" + opt.positional + "' (T2.4, T3.2, T4.1, R2.1-roundtrip)");
  auto spec = oracle::default_spec(*id, opt.n);
  if (!opt.kind.empty()) {
    const auto kind = oracle::parse_structure_kind(opt.kind);
    if (!kind) throw InputError("--kind", "unknown structure kind '" + opt.kind + "'");
    spec.kind = *kind;
  }
  spec.samples = opt.trials;
  spec.max_generators = opt.max_generators;
  spec.seed = resolve_seed(opt);
  const auto report = oracle::theorem_sweep(*id, spec);
  return {oracle::to_json(report), verdict(report.discrepancies == 0)};
}

Result do_gen(const Options& opt) {
  const auto& what = opt.positional;
  if (what == "padic") return {to_json(padic_metric(opt.p, opt.size))};
  if (what == "ideal-chain") return {to_json(ideal_chain(opt.modulus, opt.ideal, opt.depth))};
  oracle::Sampler sampler(resolve_seed(opt));
  check_carrier_size(opt.n);
  if (what == "random-basis") return {to_json(sampler.valid_basis(opt.n))};
  if (what == "random-equivalence-basis") return {to_json(sampler.equivalence_basis(opt.n, opt.max_generators))};
  if (what == "random-na-metric") return {to_json(sampler.na_pseudometric(opt.n))};
  if (what == "random-topology") return {to_json(sampler.topology(opt.n))};
  throw InputError("generator",
                   "unknown generator '" + what +
                       "' (padic, ideal-chain, random-basis, random-equivalence-basis, random-na-metric, random-topology)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite uniform spaces: conversions, non-Archimedean checks, metrization and theorem sweeps"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", opt.in, "input file, '-' for stdin, or inline JSON");
    sub->add_option("--out", opt.out, "output file (default stdout)");
  };
  auto* validate = app.add_subcommand("validate", "check structural and uniformity axioms");
  auto* convert = app.add_subcommand("convert", "convert between diagonal and covering bases");
  auto* check_na = app.add_subcommand("check-na", "decide the non-Archimedean property");
  auto* metrize_cmd = app.add_subcommand("metrize", "single ultrametric from an ordered equivalence basis");
  auto* pm_system = app.add_subcommand("pm-system", "system of ultrametrics inducing a non-Archimedean basis");
  auto* topo_check = app.add_subcommand("topo-check", "T_A, zero-dimensionality and NA-uniformizability");
  auto* uniformize = app.add_subcommand("uniformize", "non-Archimedean uniformity inducing a topology");
  auto* roundtrip = app.add_subcommand("roundtrip", "diagonal/cover round trip");
  auto* sweep = app.add_subcommand("sweep", "exhaustive or sampled theorem sweep");
  auto* gen = app.add_subcommand("gen", "generate an instance");
  for (auto* sub : {validate, convert, check_na, metrize_cmd, pm_system, topo_check, uniformize, roundtrip}) add_io(sub);
  convert->add_option("--to", opt.to, "cover | diagonal")->required();

  sweep->add_option("theorem", opt.positional, "T2.4 | T3.2 | T4.1 | R2.1-roundtrip")->required();
  sweep->add_option("--n", opt.n, "carrier size (upper bound when sampling)");
  sweep->add_option("--trials", opt.trials, "number of seeded samples; 0 = exhaustive");
  sweep->add_option("--seed", opt.seed, "sampling seed (default: $ULTRAUNIFORM_SEED or built-in)");
  sweep->add_option("--kind", opt.kind, "instance family override");
  sweep->add_option("--max-generators", opt.max_generators, "generators per basis");
  sweep->add_option("--out", opt.out, "output file (default stdout)");

  gen->add_option("generator", opt.positional, "padic | ideal-chain | random-basis | random-equivalence-basis | random-na-metric | random-topology")
      ->required();
  gen->add_option("--p", opt.p, "prime for padic");
  gen->add_option("--size", opt.size, "carrier size for padic");
  gen->add_option("--modulus", opt.modulus, "ring Z/modulus for ideal-chain");
  gen->add_option("--ideal", opt.ideal, "generator of the ideal for ideal-chain");
  gen->add_option("--depth", opt.depth, "highest ideal power for ideal-chain");
  gen->add_option("--n", opt.n, "carrier size for random generators");
  gen->add_option("--seed", opt.seed, "seed for random generators");
  gen->add_option("--max-generators", opt.max_generators, "generators for random-equivalence-basis");
  gen->add_option("--out", opt.out, "output file (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  Result result;
  try {
    if (sweep->parsed()) {
      result = do_sweep(opt);
    } else if (gen->parsed()) {
      result = do_gen(opt);
    } else {
      const auto input = read_input(opt, in);
      if (validate->parsed()) result = do_validate(input);
      if (convert->parsed()) result = do_convert(input, opt.to);
      if (check_na->parsed()) result = do_check_na(input);
      if (metrize_cmd->parsed()) result = {to_json(metrize(diagonal_basis_from_json(input).entourages()))};
      if (pm_system->parsed()) result = {to_json(system_from_na_basis(diagonal_basis_from_json(input)))};
      if (topo_check->parsed()) result = do_topo_check(input);
      if (uniformize->parsed()) {
        auto v = is_uniformizable_na(topology_from_json(input));
        result = {{{"uniformizable", v.uniformizable}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}},
                  verdict(v.uniformizable)};
      }
      if (roundtrip->parsed()) result = do_roundtrip(input);
    }
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << '\n';
    out << failure_json({e.what(), e.report()}).dump(2) << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const auto text = result.body.dump(2) + "\n";
  if (opt.out.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      err << "error: cannot write '" << opt.out << "'\n";
      return kExitInputError;
    }
    file << text;
  }
  return result.code;
}

}  // namespace ultrauniform::cli
