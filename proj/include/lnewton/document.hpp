#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lnewton/laurent.hpp"
#include "lnewton/newton_polygon.hpp"

namespace lnewton {

struct ParsedPoly {
  LaurentPoly f;
  std::vector<std::string> warnings;
};

/// Terms like 3*x^2*y, 2x, -x^-1, y^(-2); variables x and y; integer coefficients reduced mod p.
ParsedPoly parse_poly(const std::string& text, std::uint32_t p);

inline constexpr int kSchemaVersion = 1;

struct PolygonDocument {
  int schema_version = kSchemaVersion;
  std::string command;
  std::string f;  ///< canonical text
  std::uint32_t p = 0;
  unsigned a = 1;
  std::string method;
  std::string status;  ///< proved | inconclusive | error
  std::string normalization = "ord_q";
  std::int64_t runtime_ms = 0;
  std::vector<std::string> flags;
  std::vector<std::string> warnings;
  std::vector<std::pair<Rational, Rational>> vertices;
  std::vector<std::pair<Rational, long>> slopes;  ///< slope, multiplicity
  nlohmann::ordered_json certificates = nlohmann::ordered_json::object();
  std::string error_code;
  std::string error_message;

  void set_polygon(const NewtonPolygon& np);
  NewtonPolygon polygon() const;
  friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

nlohmann::ordered_json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

std::string to_json(const PolygonDocument& doc);
PolygonDocument document_from_json(const std::string& text);
std::string to_csv(const PolygonDocument& doc);

}  // namespace lnewton
