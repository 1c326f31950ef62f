#include "liesurf/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace liesurf {

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // Keep it a JSON number that reads back as a double.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write(it.value(), os, indent + 2);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write(j[i], os, indent);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write(j[i], os, indent + 2);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

Json matrix_to_json(const CMatrix& M, bool real) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      if (real)
        row.push_back(M(r, c).real());
      else
        row.push_back(Json::array({M(r, c).real(), M(r, c).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

Json matrix_to_json(const RMatrix& M) { return matrix_to_json(CMatrix(M.cast<Complex>()), true); }

Json vector_to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParameterError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size(), m = j[0].size();
  CMatrix M(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != m) throw ParameterError("matrix rows have unequal length");
    for (std::size_t c = 0; c < m; ++c) {
      const Json& e = j[r][c];
      if (e.is_number())
        M(r, c) = e.get<double>();
      else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        M(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      else
        throw ParameterError("matrix entry must be a number or a [re, im] pair");
    }
  }
  return M;
}

Json rational_vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

QVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("rational vector must be an array");
  QVector out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      out.push_back(Rational(e.get<long>()));
    else
      throw ParameterError("rational entries must be strings such as \"3/2\" or integers");
  }
  return out;
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  write(j, os, 0);
  os << "\n";
  return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(what + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace liesurf
