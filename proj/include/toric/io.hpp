#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/blending.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/injectivity.hpp"
#include "toric/triangulation.hpp"

namespace toric {

/// 17 significant digits, C locale, no exponent surprises across runs.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline std::vector<Vec> parse_points(const nlohmann::json& arr,
                                     const std::string& path) {
  std::vector<Vec> pts;
  for (const auto& row : arr) {
    Vec p;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(path + ": point entries must be numbers");
      p.push_back(v.get<double>());
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace detail

/// {"dim": d, "points": [[...], ...]}
inline PointConfig load_config(const std::string& path) {
  const auto j = detail::load_json(path);
  if (!j.contains("dim") || !j.contains("points"))
    throw ParseError(path + ": expected fields dim, points");
  try {
    return PointConfig(j["dim"].get<int>(), detail::parse_points(j["points"], path));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// {"ambient_dim": n, "points": [[...], ...]}
inline ControlPoints load_controls(const std::string& path) {
  const auto j = detail::load_json(path);
  if (!j.contains("ambient_dim") || !j.contains("points"))
    throw ParseError(path + ": expected fields ambient_dim, points");
  return ControlPoints(j["ambient_dim"].get<int>(),
                       detail::parse_points(j["points"], path));
}

/// {"values": [...]} strictly positive
inline WeightVector load_weights(const std::string& path) {
  const auto j = detail::load_json(path);
  if (!j.contains("values")) throw ParseError(path + ": expected field values");
  Vec v = j["values"].get<Vec>();
  try {
    return WeightVector::from_values(v);
  } catch (const NonPositiveInput& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// {"values": [...]}
inline LiftingFunction load_lifting(const std::string& path) {
  const auto j = detail::load_json(path);
  if (!j.contains("values")) throw ParseError(path + ": expected field values");
  return LiftingFunction{j["values"].get<Vec>()};
}

/// {"matrix": [[...], ...], "offset": [...]}
inline AffineMap load_projection(const std::string& path) {
  const auto j = detail::load_json(path);
  if (!j.contains("matrix")) throw ParseError(path + ": expected field matrix");
  AffineMap m;
  m.matrix = detail::parse_points(j["matrix"], path);
  if (j.contains("offset"))
    m.offset = j["offset"].get<Vec>();
  else
    m.offset.assign(m.matrix.size(), 0.0);
  if (m.offset.size() != m.matrix.size())
    throw ParseError(path + ": offset length must match matrix rows");
  return m;
}

/// CSV cell: either a formatted double or a verbatim string.
struct CsvCell {
  std::string text;
  CsvCell(double v) : text(fmt17(v)) {}          // NOLINT(runtime/explicit)
  CsvCell(long v) : text(std::to_string(v)) {}   // NOLINT(runtime/explicit)
  CsvCell(int v) : text(std::to_string(v)) {}    // NOLINT(runtime/explicit)
  CsvCell(std::string s) : text(std::move(s)) {} // NOLINT(runtime/explicit)
};

inline void write_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<CsvCell>>& rows) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << row[i].text;
    out << "\n";
  }
}

/// Sorted lists of sorted index tuples, e.g. [[0,1,3],[0,2,3]].
inline std::string triangulation_to_text(const Triangulation& t) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < t.simplices.size(); ++i) {
    out << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < t.simplices[i].size(); ++j)
      out << (j ? "," : "") << t.simplices[i][j];
    out << "]";
  }
  out << "]";
  return out.str();
}

inline Triangulation triangulation_from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("triangulation text: ") + e.what());
  }
  std::vector<std::vector<int>> simplices;
  for (const auto& row : j) simplices.push_back(row.get<std::vector<int>>());
  return Triangulation::from_simplices(std::move(simplices));
}

inline Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return triangulation_from_text(ss.str());
}

/// Plane curve with its dashed control polygon and an eps-tube around the
/// polygon, fitted to the data box plus a 5% margin. No timestamps.
inline void write_curve_svg(const std::string& path,
                            const std::vector<Vec>& curve,
                            const std::vector<Vec>& polygon, double tube_eps) {
  double x0 = curve[0][0], x1 = x0, y0 = curve[0][1], y1 = y0;
  auto grow = [&](const std::vector<Vec>& pts) {
    for (const auto& p : pts) {
      x0 = std::min(x0, p[0]);
      x1 = std::max(x1, p[0]);
      y0 = std::min(y0, p[1]);
      y1 = std::max(y1, p[1]);
    }
  };
  grow(curve);
  grow(polygon);
  const double mx = 0.05 * std::max(x1 - x0, 1e-9);
  const double my = 0.05 * std::max(y1 - y0, 1e-9);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.8g %.8g %.8g %.8g\">\n",
                x0 - mx, -(y1 + my), (x1 - x0) + 2 * mx, (y1 - y0) + 2 * my);
  out << buf;
  auto polyline = [&](const std::vector<Vec>& pts, const char* style) {
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (const auto& p : pts) {
      std::snprintf(buf, sizeof(buf), "%.8g,%.8g ", p[0], -p[1]);
      out << buf;
    }
    out << "\"/>\n";
  };
  if (tube_eps > 0.0) {
    std::snprintf(buf, sizeof(buf),
                  "stroke=\"#9ecae1\" stroke-opacity=\"0.5\" stroke-width=\"%.8g\" "
                  "stroke-linejoin=\"round\" stroke-linecap=\"round\"",
                  2.0 * tube_eps);
    polyline(polygon, buf);
  }
  polyline(polygon, "stroke=\"black\" stroke-width=\"0.5%\" stroke-dasharray=\"2,1\"");
  polyline(curve, "stroke=\"crimson\" stroke-width=\"0.5%\"");
  out << "</svg>\n";
}

/// Triangle mesh: vertices then faces, 1-based indices.
inline void write_obj(const std::string& path, const std::vector<Vec>& vertices,
                      const std::vector<std::vector<int>>& triangles) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (const auto& v : vertices) {
    out << "v";
    for (double c : v) out << " " << fmt17(c);
    out << "\n";
  }
  for (const auto& f : triangles) {
    out << "f";
    for (int i : f) out << " " << (i + 1);
    out << "\n";
  }
}

}  // namespace toric
