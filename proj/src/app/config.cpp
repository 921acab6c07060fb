#include "bellkit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace bellkit {

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

// Library errors raised while building a value are reported against the field
// that supplied it.
template <class F>
auto at_field(const std::string& path, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

Json parse_config_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
}

void require_schema(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("/", "config must be a JSON object");
  const auto it = doc.find("schema");
  if (it == doc.end()) throw ConfigError("/schema", "missing schema field (expected \"" + std::string(kSchemaVersion) + "\")");
  if (!it->is_string() || it->get<std::string>() != kSchemaVersion)
    throw ConfigError("/schema", "unsupported schema " + it->dump() + " (expected \"" + std::string(kSchemaVersion) + "\")");
}

void expect_fields(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(path.empty() ? "/" : path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(child(path, key), "unknown field");
  }
}

const Json& required_field(const Json& obj, const std::string& path, std::string_view key) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ConfigError(child(path, key), "missing required field");
  return *it;
}

double read_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
  return x;
}

std::size_t read_count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ConfigError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

ComplexMatrix read_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    const std::string row_path = child(path, r);
    if (!row.is_array() || row.empty()) throw ConfigError(row_path, "expected a nonempty row");
    if (r == 0) cols = row.size();
    if (row.size() != cols) throw ConfigError(row_path, "row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& z = row[c];
      const std::string z_path = child(row_path, c);
      if (!z.is_array() || z.size() != 2) throw ConfigError(z_path, "expected a [re, im] pair");
      entries.emplace_back(read_number(z[0], child(z_path, 0)), read_number(z[1], child(z_path, 1)));
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    out.push_back(std::move(row));
  }
  return out;
}

DensityOperator read_state(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "singlet") return presets::singlet();
    if (name == "product00") return presets::product00();
    if (name == "mixed") return presets::mixed();
    if (name.rfind("werner:", 0) == 0) {
      const std::string arg = name.substr(7);
      double w = 0.0;
      const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), w);
      if (ec != std::errc() || end != arg.data() + arg.size() || arg.empty())
        throw ConfigError(path, "werner weight \"" + arg + "\" is not a number");
      if (w < -1.0 / 3.0 || w > 1.0) throw ConfigError(path, "werner weight must lie in [-1/3, 1]");
      return presets::werner(w);
    }
    throw ConfigError(path, "unknown state preset \"" + name + "\" (singlet, product00, mixed, werner:w)");
  }
  const ComplexMatrix m = read_matrix(j, path);
  return at_field(path, [&] { return DensityOperator(m); });
}

Vec3 read_direction(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(path, "expected [theta, phi] in degrees");
  return direction_from_angles(read_number(j[0], child(path, 0)), read_number(j[1], child(path, 1)));
}

MarginalSet read_marginals(const Json& j, const std::string& path) {
  expect_fields(j, path, {"pA", "pB", "pC", "pD", "pAB", "pAD", "pBC", "pCD"});
  MarginalSet m;
  const std::pair<const char*, double*> slots[] = {{"pA", &m.pA},   {"pB", &m.pB},   {"pC", &m.pC},
                                                   {"pD", &m.pD},   {"pAB", &m.pAB}, {"pAD", &m.pAD},
                                                   {"pBC", &m.pBC}, {"pCD", &m.pCD}};
  for (const auto& [key, slot] : slots) *slot = read_number(required_field(j, path, key), child(path, key));
  return m;
}

Json marginals_to_json(const MarginalSet& m) {
  return {{"pA", m.pA},   {"pB", m.pB},   {"pC", m.pC},   {"pD", m.pD},
          {"pAB", m.pAB}, {"pAD", m.pAD}, {"pBC", m.pBC}, {"pCD", m.pCD}};
}

BellScenario read_scenario(const Json& obj, const std::string& path) {
  const std::string state_path = child(path, "state");
  DensityOperator state = read_state(required_field(obj, path, "state"), state_path);
  const bool has_dirs = obj.contains("directions");
  const bool has_obs = obj.contains("observables");
  if (has_dirs == has_obs)
    throw ConfigError(child(path, has_dirs ? "observables" : "directions"),
                      "give exactly one of directions or observables");

  if (has_dirs) {
    const std::string p = child(path, "directions");
    const Json& d = obj["directions"];
    expect_fields(d, p, {"a", "b", "c", "d"});
    const BellScenario::Settings s{read_direction(required_field(d, p, "a"), child(p, "a")),
                                   read_direction(required_field(d, p, "c"), child(p, "c")),
                                   read_direction(required_field(d, p, "b"), child(p, "b")),
                                   read_direction(required_field(d, p, "d"), child(p, "d"))};
    if (state.dim() != 4) throw ConfigError(state_path, "directions need a two-qubit (4x4) state");
    return BellScenario::from_settings(state, s);
  }

  const std::string p = child(path, "observables");
  const Json& o = obj["observables"];
  expect_fields(o, p, {"a", "b", "c", "d"});
  auto obs = [&](const char* key) { return read_matrix(required_field(o, p, key), child(p, key)); };
  ComplexMatrix a = obs("a"), c = obs("c"), b = obs("b"), d = obs("d");
  return at_field(p, [&] { return BellScenario(a, c, b, d, state); });
}

}  // namespace bellkit
