#include "jacobi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

namespace jacobi::io {

namespace {

using nlohmann::json;

std::vector<Entry> parse_entries(const json& doc, const std::string& key) {
  std::vector<Entry> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) throw SchemaError("key '" + key + "': expected an array of records");
  std::set<int> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    const json& rec = list[i];
    if (!rec.is_object()) throw SchemaError("key '" + where + "': expected an object");
    for (const auto& [field, value] : rec.items()) {
      (void)value;
      if (field != "n" && field != "re" && field != "im")
        throw SchemaError("key '" + where + "." + field + "': unknown field");
    }
    for (const char* field : {"n", "re", "im"})
      if (!rec.contains(field))
        throw SchemaError("key '" + where + "." + field + "': missing field");
    const json& n = rec.at("n");
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 1'000'000)
      throw SchemaError("key '" + where + ".n': expected an integer >= 1");
    for (const char* field : {"re", "im"})
      if (!rec.at(field).is_number())
        throw SchemaError("key '" + where + "." + field + "': expected a number");
    const int index = n.get<int>();
    if (!seen.insert(index).second)
      throw SchemaError("key '" + where + ".n': duplicate index " + std::to_string(index));
    const Complex value(rec.at("re").get<double>(), rec.at("im").get<double>());
    if ((key == "a" || key == "c") && value == Complex(0.0))
      throw SchemaError("key '" + where + "': zero off-diagonal entry");
    out.push_back({index, value});
  }
  return out;
}

json entries_to_json(const std::vector<Entry>& entries) {
  json list = json::array();
  for (const Entry& e : entries)
    list.push_back({{"n", e.index}, {"re", e.value.real()}, {"im", e.value.imag()}});
  return list;
}

}  // namespace

JacobiOperator parse_operator_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top level: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "a" && key != "b" && key != "c" && key != "name")
      throw SchemaError("key '" + key + "': unknown key");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw SchemaError("key 'name': expected a string");
    name = doc.at("name").get<std::string>();
  }
  try {
    JacobiOperator op(parse_entries(doc, "a"), parse_entries(doc, "b"), parse_entries(doc, "c"));
    op.set_name(std::move(name));
    return op;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

JacobiOperator load_operator_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return parse_operator_spec(buffer.str());
}

std::string serialize_operator_spec(const JacobiOperator& op) {
  json doc = json::object();
  if (!op.name().empty()) doc["name"] = op.name();
  doc["a"] = entries_to_json(op.a_entries());
  doc["b"] = entries_to_json(op.b_entries());
  doc["c"] = entries_to_json(op.c_entries());
  return doc.dump(2) + "\n";
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

GridSpec parse_grid_spec(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  if (parts.size() != 5)
    throw std::invalid_argument("grid: expected RE0:RE1:IM0:IM1:RES, got '" + std::string(text) +
                                "'");
  GridSpec grid;
  try {
    std::size_t used = 0;
    double* fields[] = {&grid.re_min, &grid.re_max, &grid.im_min, &grid.im_max};
    for (int i = 0; i < 4; ++i) {
      *fields[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    }
    const int res = std::stoi(parts[4], &used);
    if (used != parts[4].size()) throw std::invalid_argument(parts[4]);
    grid.re_resolution = grid.im_resolution = res;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("grid: malformed field in '" + std::string(text) + "'");
  }
  if (grid.re_resolution < 2) throw std::invalid_argument("grid: RES must be >= 2");
  if (!(grid.re_min < grid.re_max) || !(grid.im_min < grid.im_max))
    throw std::invalid_argument("grid: empty range");
  return grid;
}

void write_region_grid_csv(std::ostream& out, const std::vector<GridPoint>& points) {
  out << "re,im,label\n";
  for (const GridPoint& p : points)
    out << format_number(p.lambda.real()) << ',' << format_number(p.lambda.imag()) << ','
        << to_string(p.label) << '\n';
}

void write_jost_grid_csv(std::ostream& out, const ComplexPolynomial& jost_function,
                         const GridSpec& grid) {
  out << "re,im,abs_v0\n";
  for (int row = 0; row < grid.im_resolution; ++row)
    for (int col = 0; col < grid.re_resolution; ++col) {
      const Complex z = grid.point(row, col);
      out << format_number(z.real()) << ',' << format_number(z.imag()) << ','
          << format_number(std::abs(jost_function(z))) << '\n';
    }
}

std::string region_svg(const RegionReport& report, const std::vector<Eigenvalue>& eigenvalues) {
  constexpr double kWidth = 800.0, kHeight = 400.0;
  auto x_of = [&](double re) { return (re + 4.0) / 8.0 * kWidth; };
  auto y_of = [&](double im) { return (2.0 - im) / 4.0 * kHeight; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n"
      << "  <line x1=\"0\" y1=\"" << fmt(y_of(0)) << "\" x2=\"800\" y2=\"" << fmt(y_of(0))
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n"
      << "  <line x1=\"" << fmt(x_of(0)) << "\" y1=\"0\" x2=\"" << fmt(x_of(0))
      << "\" y2=\"400\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  if (report.rectangles) {
    const RectangleEnclosure& r = *report.rectangles;
    for (double sign : {-1.0, 1.0}) {
      const double left = sign > 0 ? r.re_lo : -r.re_hi;
      svg << "  <rect x=\"" << fmt(x_of(left)) << "\" y=\"" << fmt(y_of(r.im_bound))
          << "\" width=\"" << fmt(x_of(left + r.re_hi - r.re_lo) - x_of(left))
          << "\" height=\"" << fmt(y_of(-r.im_bound) - y_of(r.im_bound))
          << "\" fill=\"none\" stroke=\"#2a7f2a\" stroke-width=\"1.5\"/>\n";
    }
  }

  // Boundary of the free region: z + 1/z over |z - 1/z| = threshold, |z| <= 1.
  if (report.omega_threshold > 0.0) {
    constexpr int kSamples = 720;
    std::vector<std::vector<Complex>> pieces(1);
    Complex previous;
    for (int i = 0; i <= kSamples; ++i) {
      const Complex u = std::polar(report.omega_threshold, 2.0 * std::numbers::pi * i / kSamples);
      const Complex s = std::sqrt(u * u + 4.0);
      Complex z = (u + s) / 2.0;
      if (std::abs(z) > 1.0) z = (u - s) / 2.0;
      const Complex lambda = z + 1.0 / z;
      if (i > 0 && std::abs(lambda - previous) > 0.5) pieces.emplace_back();
      pieces.back().push_back(lambda);
      previous = lambda;
    }
    for (const auto& piece : pieces) {
      if (piece.size() < 2) continue;
      svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < piece.size(); ++i)
        svg << (i ? " " : "") << fmt(x_of(piece[i].real())) << ',' << fmt(y_of(piece[i].imag()));
      svg << "\"/>\n";
    }
  }

  svg << "  <line x1=\"" << fmt(x_of(-2)) << "\" y1=\"" << fmt(y_of(0)) << "\" x2=\""
      << fmt(x_of(2)) << "\" y2=\"" << fmt(y_of(0))
      << "\" stroke=\"black\" stroke-width=\"4\"/>\n";
  for (const Eigenvalue& e : eigenvalues)
    svg << "  <circle cx=\"" << fmt(x_of(e.lambda.real())) << "\" cy=\""
        << fmt(y_of(e.lambda.imag())) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
  svg << "  <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"12\">t = "
      << format_number(report.t) << ", sigma0(0) = " << format_number(report.D0)
      << ", threshold = " << format_number(report.omega_threshold) << "</text>\n"
      << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace jacobi::io
