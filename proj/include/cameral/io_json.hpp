#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cameral/chart.hpp"
#include "cameral/rational.hpp"

namespace cameral {

/// Minimal JSON value for emission: insertion-ordered objects and floats
/// printed with 17 significant digits, so identical inputs give bitwise
/// identical output.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::kNull) {}
  static JsonValue boolean(bool b);
  static JsonValue integer(std::int64_t v);
  static JsonValue real(double v);
  static JsonValue str(std::string s);
  static JsonValue array();
  static JsonValue object();
  static JsonValue complex(Complex z);  // [re, im]

  JsonValue& push(JsonValue v);                     // array append
  JsonValue& set(const std::string& key, JsonValue v);  // object insert

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { kNull, kBool, kInt, kReal, kString, kArray, kObject };
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> fields_;
};

std::string format_double(double v);  // %.17g

// Parse "1.0+0.5i", "-2i", "3" and friends.
Complex parse_complex(const std::string& text);

struct ChartInput {
  GroupName group;
  std::vector<UniPoly> beta;
};

// Chart schema: {"group": "A2", "beta": [[[re,im],...], ...]} with
// coefficient arrays low-to-high; bare numbers are accepted as reals.
ChartInput parse_chart_json(const std::string& text);

// {"gamma": [...]} with the same coefficient encoding, or a bare array.
std::vector<UniPoly> parse_deformation_json(const std::string& text);

// {"points": [[re,im],...]} or a bare array of [re,im] pairs.
std::vector<Complex> parse_loop_json(const std::string& text);

// Reads a file, or treats the argument as inline JSON when it starts with
// '{' or '['.
std::string slurp_json_arg(const std::string& path_or_inline);

}  // namespace cameral
