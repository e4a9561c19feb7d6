#include "sumset/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sumset {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string(what) + ": not valid JSON");
  return j;
}

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument(std::string(what) + ": expected a rational string");
}

std::string join_members(const std::vector<int>& members) {
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s;
}

}  // namespace

CompactSet1D set_from_json_text(const std::string& text) {
  const json j = parse_json(text, "set file");
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
    throw std::invalid_argument("set file: expected an object with an \"intervals\" array");
  std::vector<Interval> parts;
  for (const json& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("set file: each interval must be a two-element array");
    parts.emplace_back(rational_field(pair[0], "set file endpoint"),
                       rational_field(pair[1], "set file endpoint"));
  }
  return CompactSet1D(std::move(parts));
}

std::string set_to_json_text(const CompactSet1D& a) {
  ordered_json intervals = ordered_json::array();
  for (const Interval& p : a.parts())
    intervals.push_back(ordered_json::array({p.lo.str(), p.hi.str()}));
  ordered_json j;
  j["intervals"] = std::move(intervals);
  return j.dump();
}

CompactSet1D read_set_file(const std::string& path) { return set_from_json_text(read_text_file(path)); }

void write_set_file(const std::string& path, const CompactSet1D& a) {
  write_text_file(path, set_to_json_text(a) + "\n");
}

SetSystem system_from_json_text(const std::string& text) {
  const json j = parse_json(text, "set system file");
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array() || j["sets"].empty())
    throw std::invalid_argument("set system file: expected an object with a nonempty \"sets\" array");
  SetSystem sys;
  for (const json& s : j["sets"]) sys.sets.push_back(set_from_json_text(s.dump()));
  return sys;
}

std::string system_to_json_text(const SetSystem& sys) {
  ordered_json sets = ordered_json::array();
  for (const CompactSet1D& s : sys.sets) sets.push_back(ordered_json::parse(set_to_json_text(s)));
  ordered_json j;
  j["sets"] = std::move(sets);
  return j.dump();
}

SetSystem read_system_file(const std::string& path) {
  return system_from_json_text(read_text_file(path));
}

FractionalPartition partition_from_json_text(const std::string& text) {
  const json j = parse_json(text, "partition file");
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer() || !j.contains("edges") ||
      !j["edges"].is_array())
    throw std::invalid_argument("partition file: expected {\"m\": int, \"edges\": [...]}");
  FractionalPartition p;
  p.m = j["m"].get<int>();
  for (const json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("set") || !e["set"].is_array() || !e.contains("weight"))
      throw std::invalid_argument("partition file: each edge needs \"set\" and \"weight\"");
    WeightedEdge edge;
    for (const json& i : e["set"]) {
      if (!i.is_number_integer())
        throw std::invalid_argument("partition file: edge members must be integers");
      edge.members.push_back(i.get<int>());
    }
    edge.weight = rational_field(e["weight"], "partition weight");
    p.edges.push_back(std::move(edge));
  }
  return p;
}

std::string partition_to_json_text(const FractionalPartition& p) {
  ordered_json edges = ordered_json::array();
  for (const WeightedEdge& e : p.edges) {
    ordered_json je;
    je["set"] = e.members;
    je["weight"] = e.weight.str();
    edges.push_back(std::move(je));
  }
  ordered_json j;
  j["m"] = p.m;
  j["edges"] = std::move(edges);
  return j.dump();
}

FractionalPartition read_partition_file(const std::string& path) {
  return partition_from_json_text(read_text_file(path));
}

std::string region_point_to_json_text(const RegionPoint& p) {
  ordered_json values;
  ordered_json vec = ordered_json::array();
  vec.push_back("0");  // the empty subset leads the canonical vector
  for (unsigned mask : RegionPoint::canonical_masks(p.m)) {
    std::vector<int> members;
    for (int i = 0; i < p.m; ++i)
      if (mask & (1u << i)) members.push_back(i + 1);
    const Rational& v = p.at(mask);
    values[join_members(members)] = v.str();
    vec.push_back(v.str());
  }
  ordered_json j;
  j["m"] = p.m;
  j["values"] = std::move(values);
  j["vector"] = std::move(vec);
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

}  // namespace sumset
