#include "pmcover/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pmcover/errors.hpp"

namespace pmcover {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<int>();
}

double as_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + " must be a number");
  return value.get<double>();
}

Rational weight_from_json(const json& value, std::size_t index) {
  const std::string where = "weights[" + std::to_string(index) + "]";
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) return Rational::from_double(value.get<double>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw ParseError(where + " must be a number or a \"p/q\" string");
}

json weight_to_json(const Rational& w) {
  if (w.is_integer()) return w.num();
  // Plain decimals when the double reads back to the same fraction.
  try {
    if (Rational::from_double(w.to_double()) == w) return w.to_double();
  } catch (const ParseError&) {
  }
  return w.str();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

SetSystem setsystem_from_json(const json& doc) {
  if (doc.contains("version") && doc["version"] != 1) throw ParseError("unsupported instance version");
  const int n = as_int(require(doc, "n"), "\"n\"");
  std::vector<std::string> names;
  std::map<std::string, int> by_name;
  if (doc.contains("names")) {
    const json& raw = doc["names"];
    if (!raw.is_array()) throw ParseError("\"names\" must be an array");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!raw[i].is_string()) throw ParseError("names[" + std::to_string(i) + "] must be a string");
      names.push_back(raw[i].get<std::string>());
      if (!by_name.emplace(names.back(), static_cast<int>(i)).second) {
        throw ValidationError("name \"" + names.back() + "\" used twice");
      }
    }
  }
  const json& raw_sets = require(doc, "sets");
  if (!raw_sets.is_array()) throw ParseError("\"sets\" must be an array");
  std::vector<std::vector<int>> sets;
  for (std::size_t i = 0; i < raw_sets.size(); ++i) {
    const json& raw = raw_sets[i];
    if (!raw.is_array()) throw ParseError("sets[" + std::to_string(i) + "] must be an array");
    std::vector<int> members;
    for (std::size_t j = 0; j < raw.size(); ++j) {
      const std::string where = "sets[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (raw[j].is_string()) {
        const auto it = by_name.find(raw[j].get<std::string>());
        if (it == by_name.end()) throw ValidationError(where + " names an unknown element");
        members.push_back(it->second);
      } else {
        members.push_back(as_int(raw[j], where));
      }
    }
    sets.push_back(std::move(members));
  }
  std::optional<std::vector<Rational>> weights;
  if (doc.contains("weights")) {
    const json& raw = doc["weights"];
    if (!raw.is_array()) throw ParseError("\"weights\" must be an array");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < raw.size(); ++i) values.push_back(weight_from_json(raw[i], i));
    weights = std::move(values);
  }
  return SetSystem(n, std::move(sets), std::move(weights), std::move(names));
}

json to_json(const SetSystem& sys) {
  json doc;
  doc["version"] = 1;
  doc["n"] = sys.n();
  doc["sets"] = sys.sets();
  if (sys.weighted()) {
    json weights = json::array();
    for (const Rational& w : sys.weights()) weights.push_back(weight_to_json(w));
    doc["weights"] = std::move(weights);
  }
  if (!sys.names().empty()) doc["names"] = sys.names();
  return doc;
}

SetSystem load_instance(const std::filesystem::path& path) {
  return setsystem_from_json(parse_json(read_text_file(path), path.string()));
}

void save_instance(const SetSystem& sys, const std::filesystem::path& path) {
  write_text_file(path, to_json(sys).dump() + "\n");
}

Graph graph_from_json(const json& doc) {
  const int n = as_int(require(doc, "n"), "\"n\"");
  const json& raw = require(doc, "edges");
  if (!raw.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (!raw[e].is_array() || raw[e].size() != 2) throw ParseError(where + " must be a pair");
    edges.emplace_back(as_int(raw[e][0], where), as_int(raw[e][1], where));
  }
  return Graph(n, edges);
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::set<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long m = 0;
      if (!(fields >> format >> n >> m)) throw ParseError("bad DIMACS problem line " + std::to_string(line_no));
    } else if (tag == "e") {
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) throw ParseError("bad DIMACS edge line " + std::to_string(line_no));
      if (n < 0) throw ParseError("DIMACS edge before problem line");
      if (u == v) throw ValidationError("DIMACS line " + std::to_string(line_no) + " is a self-loop");
      edges.emplace(std::min(u, v) - 1, std::max(u, v) - 1);
    } else {
      throw ParseError("unknown DIMACS line " + std::to_string(line_no));
    }
  }
  if (n < 0) throw ParseError("DIMACS file has no problem line");
  return Graph(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

Graph load_graph(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text, path.string()));
  return parse_dimacs(text);
}

IntervalSet intervals_from_json(const json& doc) {
  const json& raw = require(doc, "intervals");
  if (!raw.is_array()) throw ParseError("\"intervals\" must be an array");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string where = "intervals[" + std::to_string(i) + "]";
    if (!raw[i].is_array() || raw[i].size() != 2) throw ParseError(where + " must be a pair");
    out.push_back({as_number(raw[i][0], where), as_number(raw[i][1], where)});
  }
  return IntervalSet(std::move(out));
}

json to_json(const IntervalSet& intervals) {
  json raw = json::array();
  for (const auto& iv : intervals.intervals()) raw.push_back({iv.left, iv.right});
  return json{{"intervals", std::move(raw)}};
}

IntervalSet load_intervals(const std::filesystem::path& path) {
  return intervals_from_json(parse_json(read_text_file(path), path.string()));
}

CostModel parse_model_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&](const std::string& text) {
    if (text == "inf" || text == "+inf") return CostModel::kInf;
    if (text == "-inf") return -CostModel::kInf;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number in model spec '" + spec + "'");
    }
    if (used != text.size()) throw ParseError("bad number in model spec '" + spec + "'");
    return value;
  };
  if (head == "pmean" && !arg.empty()) return CostModel::pmean(number(arg));
  if (head == "rob" && !arg.empty()) return CostModel::rent_or_buy(number(arg));
  if (head == "table" && !arg.empty()) {
    const json doc = parse_json(read_text_file(arg), arg);
    const json& values = doc.is_object() ? require(doc, "values") : doc;
    if (!values.is_array()) throw ParseError("table file must hold an array of numbers");
    std::vector<double> table;
    for (std::size_t i = 0; i < values.size(); ++i) table.push_back(as_number(values[i], "table[" + std::to_string(i) + "]"));
    return CostModel::concave_table(std::move(table));
  }
  if (!arg.empty()) throw ParseError("unknown model spec '" + spec + "'");
  if (head == "entropy") return CostModel::entropy();
  if (head == "unit") return CostModel::unit();
  if (head == "maxmin") return CostModel::max_min();
  if (head == "max") return CostModel::max_part();
  if (head == "geometric") return CostModel::geometric();
  throw ParseError("unknown model spec '" + spec + "'");
}

}  // namespace pmcover
