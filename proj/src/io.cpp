#include "al_ist/io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace al_ist::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string pairs_to_json(std::span<const cplx> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + format_double(values[i].real()) + ", " + format_double(values[i].imag()) + "]";
  }
  return out + "]";
}

}  // namespace

std::string sequence_to_json(const Sequence& q) {
  return "{\"offset\": " + std::to_string(q.offset()) + ", \"values\": " + pairs_to_json(q.values()) + "}\n";
}

Sequence sequence_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("sequence document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("sequence document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "offset" && key != "values") throw std::invalid_argument("sequence document: unknown field '" + key + "'");
  }
  if (!doc.contains("offset") || !doc["offset"].is_number_integer()) {
    throw std::invalid_argument("sequence document: 'offset' must be an integer");
  }
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw std::invalid_argument("sequence document: 'values' must be an array");
  }
  std::vector<cplx> values;
  for (const auto& pair : doc["values"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw std::invalid_argument("sequence document: each value must be a [re, im] number pair");
    }
    values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return Sequence(doc["offset"].get<int>(), std::move(values));
}

Sequence read_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return sequence_from_json(ss.str());
}

void write_sequence(const std::string& path, const Sequence& q) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << sequence_to_json(q);
}

std::string laurent_to_json(const LaurentPoly& p) {
  return "{\"min_deg\": " + std::to_string(p.min_deg()) + ", \"coeffs\": " + pairs_to_json(p.coeffs()) + "}";
}

double unit_uniform(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

Sequence random_sequence(std::uint64_t seed, int sites, int offset, double max_modulus) {
  if (sites < 0) throw std::invalid_argument("random_sequence: negative site count");
  if (!(max_modulus >= 0.0 && max_modulus < 1.0)) {
    throw std::invalid_argument("random_sequence: max_modulus must lie in [0, 1)");
  }
  std::mt19937_64 gen(seed);
  std::vector<cplx> values;
  values.reserve(static_cast<std::size_t>(sites));
  for (int i = 0; i < sites; ++i) {
    const double modulus = max_modulus * unit_uniform(gen());
    const double phase = 2.0 * std::numbers::pi * unit_uniform(gen());
    values.push_back(std::polar(modulus, phase));
  }
  return Sequence(offset, std::move(values));
}

}  // namespace al_ist::io
