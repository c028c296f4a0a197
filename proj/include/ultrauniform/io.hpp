#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ultrauniform/core.hpp"
#include "ultrauniform/errors.hpp"
#include "ultrauniform/point_set.hpp"
#include "ultrauniform/pseudometric.hpp"
#include "ultrauniform/topology.hpp"
#include "ultrauniform/uniformity.hpp"
#include "ultrauniform/validation.hpp"

// JSON encodings of every structure. Decoders throw InputError naming the
// offending field as a JSON-pointer-like path.

namespace ultrauniform {

class InputError : public Error {
 public:
  InputError(const std::string& field, const std::string& problem)
      : Error("field '" + field + "': " + problem), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

using nlohmann::json;

json to_json(PointSet s);
json to_json(const Relation& r);
json to_json(const Partition& p);
json to_json(const Cover& c);
json to_json(const DiagonalBasis& b);
json to_json(const CoverBasis& cb);
json to_json(const ValidationReport& report);
json to_json(const Pseudometric& d);
json to_json(const PseudometricSystem& m);
json to_json(const Chain& chain);
json to_json(const FiniteTopology& t);

/// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

/// Carrier size plus optional "labels" of an encoded object.
Carrier carrier_from_json(const json& j, const std::string& path = "");

Relation relation_from_json(const json& j, const std::string& path = "");
Partition partition_from_json(const json& j, const std::string& path = "");
DiagonalBasis diagonal_basis_from_json(const json& j, const std::string& path = "");
CoverBasis cover_basis_from_json(const json& j, const std::string& path = "");
Pseudometric pseudometric_from_json(const json& j, const std::string& path = "");
PseudometricSystem pseudometric_system_from_json(const json& j, const std::string& path = "");
Chain chain_from_json(const json& j, const std::string& path = "");
FiniteTopology topology_from_json(const json& j, const std::string& path = "");

/// Which structure an encoded object holds, judged by its distinguishing key.
enum class EncodedKind { relation, partition, diagonal_basis, cover_basis, pseudometric, pseudometric_system, chain, topology };

EncodedKind detect_kind(const json& j);

}  // namespace ultrauniform
