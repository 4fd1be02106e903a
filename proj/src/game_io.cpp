#include "mcgame/game_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcgame/error.hpp"
#include "tensor.hpp"

namespace mcgame {

namespace {

using json = nlohmann::json;

int read_int(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw GameError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer()) throw GameError(std::string("field \"") + key + "\" must be an integer");
  return it->get<int>();
}

}  // namespace

LoadedGame parse_game(const std::string& text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameError(std::string("parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw GameError("game document must be a JSON object");

  const int n = read_int(doc, "n");
  if (n < 1) throw GameError("n must be at least 1");

  std::vector<int> k_list;
  const auto k_it = doc.find("k");
  if (k_it == doc.end()) throw GameError("missing field \"k\"");
  bool heterogeneous = false;
  if (k_it->is_number_integer()) {
    k_list.assign(n, k_it->get<int>());
  } else if (k_it->is_array()) {
    for (const auto& item : *k_it) {
      if (!item.is_number_integer()) throw GameError("k list entries must be integers");
      k_list.push_back(item.get<int>());
    }
    if (static_cast<int>(k_list.size()) != n) {
      throw GameError("k list has " + std::to_string(k_list.size()) + " entries, expected n = " +
                      std::to_string(n));
    }
    heterogeneous = true;
  } else {
    throw GameError("field \"k\" must be an integer or a list of integers");
  }
  for (int ki : k_list) {
    if (ki < 1) throw GameError("every k must be at least 1");
  }

  const auto v_it = doc.find("values");
  if (v_it == doc.end() || !v_it->is_array()) throw GameError("field \"values\" must be an array");
  std::vector<double> values;
  values.reserve(v_it->size());
  for (const auto& item : *v_it) {
    if (!item.is_number()) throw GameError("values must be numbers");
    const double x = item.get<double>();
    if (!std::isfinite(x)) throw GameError("values must be finite");
    values.push_back(x);
  }
  if (values.empty()) throw GameError("table length mismatch: no values");

  const double raw_zero = values[0];
  if (raw_zero != 0.0) {
    if (!options.normalize) {
      throw GameError("v(0) = " + std::to_string(raw_zero) + " is not 0 (use --normalize)");
    }
    for (double& x : values) x -= raw_zero;
  }

  // Uniform lists go through the same clamp path, which is then the identity.
  MultichoiceGame game = extend_heterogeneous(values, k_list, options.limits);
  return LoadedGame{std::move(game), std::move(k_list), heterogeneous, raw_zero};
}

LoadedGame load_game(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw GameError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str(), options);
}

std::string serialize_game(const MultichoiceGame& v) {
  nlohmann::ordered_json doc;
  doc["n"] = v.n();
  doc["k"] = v.k();
  doc["values"] = std::vector<double>(v.values().begin(), v.values().end());
  return doc.dump() + "\n";
}

std::string game_to_csv(const MultichoiceGame& v) {
  std::string out;
  for (int i = 0; i < v.n(); ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "value\n";
  char buf[40];
  detail::for_each_point(std::vector<int>(v.n(), v.k() + 1),
                         [&](std::uint64_t idx, const std::vector<int>& x) {
                           for (int level : x) out += std::to_string(level) + ",";
                           std::snprintf(buf, sizeof buf, "%.17g", v.at(idx));
                           out += buf;
                           out += '\n';
                         });
  return out;
}

}  // namespace mcgame
