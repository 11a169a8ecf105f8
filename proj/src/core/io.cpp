#include "core/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

#include "core/errors.hpp"
#include "core/shift_graph.hpp"

namespace stairprune {

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw parse_error("malformed rational: '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("malformed rational: '" + text + "'");
  return BigInt(text[0] == '+' ? text.substr(1) : text);  // cpp_int rejects a leading '+'
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));

  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw parse_error("malformed rational: zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);  // reduced on construction
}

std::string rational_to_string(const Rational& q) {
  const BigInt den = rational_den(q);
  std::string out = rational_num(q).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

Module parse_module_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("summands"))
    throw parse_error("module document needs 'dim' and 'summands'");
  if (!doc["dim"].is_number_integer()) throw parse_error("'dim' must be an integer");
  if (!doc["summands"].is_array()) throw parse_error("'summands' must be an array");

  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw validation_error("'dim' must be positive");

  std::vector<Upset> summands;
  for (const auto& entry : doc["summands"]) {
    if (!entry.is_object() || !entry.contains("generators") || !entry["generators"].is_array())
      throw parse_error("each summand needs a 'generators' array");
    std::vector<Point> gens;
    for (const auto& gen : entry["generators"]) {
      if (!gen.is_array()) throw parse_error("each generator must be an array of rationals");
      std::vector<Rational> coords;
      for (const auto& coord : gen) {
        if (!coord.is_string()) throw parse_error("coordinates must be rational strings");
        coords.push_back(parse_rational(coord.get<std::string>()));
      }
      if (static_cast<int>(coords.size()) != dim)
        throw validation_error("generator length does not match 'dim'");
      gens.emplace_back(std::move(coords));
    }
    if (gens.empty()) throw validation_error("summands need at least one generator");
    summands.emplace_back(std::move(gens));
  }
  return Module(dim, std::move(summands));
}

std::string module_to_json(const Module& m) {
  nlohmann::json doc;
  doc["dim"] = m.dim();
  doc["summands"] = nlohmann::json::array();
  for (const auto& s : m.summands()) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : s.generators()) {
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& c : g.coords()) coords.push_back(rational_to_string(c));
      gens.push_back(std::move(coords));
    }
    doc["summands"].push_back({{"generators", std::move(gens)}});
  }
  return doc.dump() + "\n";
}

std::string graph_to_dot(const Module& m, const Rational& alpha) {
  const ShiftGraph g = build_graph(m, alpha);
  std::ostringstream out;
  out << "digraph G {\n";
  for (int i = 0; i < g.r; ++i) out << "  \"M" << (i + 1) << "\";\n";
  for (int i = 0; i < g.r; ++i)
    for (int j = 0; j < g.r; ++j)
      if (g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        out << "  \"M" << (i + 1) << "\" -> \"M" << (j + 1) << "\" [label=\"t="
            << rational_to_string(g.thresholds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
            << "\"];\n";
  out << "}\n";
  return out.str();
}

namespace {

// fixed-point decimal with three digits, floor rounding; deterministic bytes
std::string svg_decimal(const Rational& q) {
  const BigInt scaled_num = rational_num(q) * 1000;
  const BigInt den = rational_den(q);
  BigInt v = scaled_num / den;
  if (scaled_num < 0 && v * den != scaled_num) v -= 1;  // floor, not truncation
  const bool negative = v < 0;
  BigInt a = negative ? BigInt(-v) : v;
  const BigInt whole = a / 1000;
  const BigInt frac = a % 1000;
  std::string f = frac.str();
  f.insert(f.begin(), 3 - f.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + f;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

}  // namespace

std::string module_to_svg(const Module& m) {
  if (m.dim() != 2) throw validation_error("plots are only available for dimension 2");

  // generator bounding box, padded by one unit
  bool first = true;
  Rational xmin, xmax, ymin, ymax;
  for (const auto& s : m.summands())
    for (const auto& g : s.generators()) {
      if (first || g[0] < xmin) xmin = g[0];
      if (first || g[0] > xmax) xmax = g[0];
      if (first || g[1] < ymin) ymin = g[1];
      if (first || g[1] > ymax) ymax = g[1];
      first = false;
    }
  if (first) {  // zero module: fixed empty frame
    xmin = ymin = 0;
    xmax = ymax = 0;
  }
  xmin -= 1;
  ymin -= 1;
  xmax += 1;
  ymax += 1;

  const Rational scale(40);
  const Rational width = (xmax - xmin) * scale;
  const Rational height = (ymax - ymin) * scale;
  auto sx = [&](const Rational& x) { return svg_decimal((x - xmin) * scale); };
  auto sy = [&](const Rational& y) { return svg_decimal((ymax - y) * scale); };  // y points up

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << svg_decimal(width) << "\" height=\"" << svg_decimal(height) << "\" viewBox=\"0 0 "
      << svg_decimal(width) << " " << svg_decimal(height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << svg_decimal(width) << "\" height=\""
      << svg_decimal(height) << "\" fill=\"white\"/>\n";

  for (std::size_t s = 0; s < m.summands().size(); ++s) {
    // generators are lex sorted, so x ascends and y descends along the antichain
    const auto& gens = m.summands()[s].generators();
    std::ostringstream points;
    points << sx(gens.front()[0]) << "," << sy(ymax);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k > 0) points << " " << sx(gens[k][0]) << "," << sy(gens[k - 1][1]);
      points << " " << sx(gens[k][0]) << "," << sy(gens[k][1]);
    }
    points << " " << sx(xmax) << "," << sy(gens.back()[1]);
    out << "  <polyline fill=\"none\" stroke=\"" << kPalette[s % 8] << "\" stroke-width=\"2\" points=\""
        << points.str() << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string format_distance(const DistanceResult& r) {
  if (!r.finite) return "inf";
  if (r.exact) return rational_to_string(r.value);
  return "≈ " + rational_to_string(r.value) + " [" + rational_to_string(r.bracket->first) +
         ", " + rational_to_string(r.bracket->second) + "]";
}

}  // namespace stairprune
