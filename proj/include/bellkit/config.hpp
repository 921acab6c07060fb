#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bellkit/bell.hpp"
#include "bellkit/errors.hpp"
#include "bellkit/marginals.hpp"
#include "bellkit/matrix.hpp"
#include "bellkit/states.hpp"

namespace bellkit {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "bellkit/1";

/// Malformed or invalid configuration. field() is a JSON-pointer-like path
/// ("/directions/a/0"), or "line L, column C" for syntax errors.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Parses JSON text; syntax errors become ConfigError with line and column.
Json parse_config_text(std::string_view text);

/// The document must be an object whose "schema" equals kSchemaVersion.
void require_schema(const Json& doc);

/// Rejects any key of obj outside allowed.
void expect_fields(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed);

const Json& required_field(const Json& obj, const std::string& path, std::string_view key);
double read_number(const Json& j, const std::string& path);
std::size_t read_count(const Json& j, const std::string& path);

/// [[[re, im], ...], ...]
ComplexMatrix read_matrix(const Json& j, const std::string& path);
Json matrix_to_json(const ComplexMatrix& m);

/// "singlet", "product00", "mixed", "werner:w", or a matrix literal.
DensityOperator read_state(const Json& j, const std::string& path);

/// [theta, phi] in degrees.
Vec3 read_direction(const Json& j, const std::string& path);

/// {pA, pB, pC, pD, pAB, pAD, pBC, pCD}
MarginalSet read_marginals(const Json& j, const std::string& path);
Json marginals_to_json(const MarginalSet& m);

/// Two-party scenario from {state, directions{a,b,c,d}} or
/// {state, observables{a,b,c,d}} inside obj.
BellScenario read_scenario(const Json& obj, const std::string& path);

}  // namespace bellkit
