#include "cameral/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cameral/errors.hpp"

namespace cameral {

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::kBool;
  v.bool_ = b;
  return v;
}

JsonValue JsonValue::integer(std::int64_t x) {
  JsonValue v;
  v.kind_ = Kind::kInt;
  v.int_ = x;
  return v;
}

JsonValue JsonValue::real(double x) {
  JsonValue v;
  v.kind_ = Kind::kReal;
  v.real_ = x;
  return v;
}

JsonValue JsonValue::str(std::string s) {
  JsonValue v;
  v.kind_ = Kind::kString;
  v.string_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::kArray;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::kObject;
  return v;
}

JsonValue JsonValue::complex(Complex z) {
  JsonValue v = array();
  v.push(real(z.real()));
  v.push(real(z.imag()));
  return v;
}

JsonValue& JsonValue::push(JsonValue v) {
  items_.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  fields_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
  if (indent <= 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  switch (kind_) {
    case Kind::kNull: out += "null"; return;
    case Kind::kBool: out += bool_ ? "true" : "false"; return;
    case Kind::kInt: out += std::to_string(int_); return;
    case Kind::kReal: out += format_double(real_); return;
    case Kind::kString: write_escaped(out, string_); return;
    case Kind::kArray: {
      if (items_.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        newline_indent(out, indent, depth + 1);
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        else if (indent <= 0) {}
      }
      newline_indent(out, indent, depth);
      out += ']';
      return;
    }
    case Kind::kObject: {
      if (fields_.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        newline_indent(out, indent, depth + 1);
        write_escaped(out, fields_[i].first);
        out += indent > 0 ? ": " : ":";
        fields_[i].second.write(out, indent, depth + 1);
        if (i + 1 < fields_.size()) out += ',';
      }
      newline_indent(out, indent, depth);
      out += '}';
      return;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ValidationError("empty complex literal");

  // Split into a leading real part and an optional trailing imaginary part.
  double re = 0.0;
  double im = 0.0;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t from, std::size_t* end) {
    try {
      return std::stod(s.substr(from), end);
    } catch (const std::exception&) {
      throw ValidationError("malformed complex literal: " + text);
    }
  };
  if (s == "i") return Complex(0.0, 1.0);
  if (s == "-i") return Complex(0.0, -1.0);
  std::size_t used = 0;
  const double first = read_number(pos, &used);
  pos += used;
  if (pos == s.size()) return Complex(first, 0.0);
  if (s[pos] == 'i' || s[pos] == 'j') {
    if (pos + 1 != s.size()) throw ValidationError("malformed complex literal: " + text);
    return Complex(0.0, first);
  }
  re = first;
  if (s[pos] != '+' && s[pos] != '-')
    throw ValidationError("malformed complex literal: " + text);
  if (s.substr(pos) == "+i") return Complex(re, 1.0);
  if (s.substr(pos) == "-i") return Complex(re, -1.0);
  const double second = read_number(pos, &used);
  pos += used;
  if (pos + 1 != s.size() || (s[pos] != 'i' && s[pos] != 'j'))
    throw ValidationError("malformed complex literal: " + text);
  im = second;
  return Complex(re, im);
}

namespace {

Complex coeff_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ValidationError("coefficient must be a number or an [re, im] pair");
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be a coefficient array (low to high)");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(coeff_from_json(c));
  return UniPoly(std::move(coeffs));
}

nlohmann::json parse_or_rethrow(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace

ChartInput parse_chart_json(const std::string& text) {
  const nlohmann::json j = parse_or_rethrow(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("beta"))
    throw ValidationError("chart JSON must be an object with \"group\" and \"beta\"");
  ChartInput input;
  input.group = parse_group(j["group"].get<std::string>());
  if (!j["beta"].is_array()) throw ValidationError("\"beta\" must be an array of polynomials");
  for (const auto& p : j["beta"]) input.beta.push_back(unipoly_from_json(p));
  return input;
}

std::vector<UniPoly> parse_deformation_json(const std::string& text) {
  const nlohmann::json j = parse_or_rethrow(text);
  const nlohmann::json& arr = j.is_object() && j.contains("gamma") ? j["gamma"] : j;
  if (!arr.is_array()) throw ValidationError("deformation JSON must hold an array of polynomials");
  std::vector<UniPoly> gamma;
  for (const auto& p : arr) gamma.push_back(unipoly_from_json(p));
  return gamma;
}

std::vector<Complex> parse_loop_json(const std::string& text) {
  const nlohmann::json j = parse_or_rethrow(text);
  const nlohmann::json& arr = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!arr.is_array()) throw ValidationError("loop JSON must hold an array of [re, im] points");
  std::vector<Complex> points;
  for (const auto& p : arr) points.push_back(coeff_from_json(p));
  return points;
}

std::string slurp_json_arg(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && (path_or_inline.front() == '{' || path_or_inline.front() == '['))
    return path_or_inline;
  std::ifstream in(path_or_inline);
  if (!in) throw ValidationError("cannot open file: " + path_or_inline);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace cameral
