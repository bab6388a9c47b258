#include "latmod/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace latmod {

using nlohmann::json;
using nlohmann::ordered_json;

LatticeFile lattice_file_parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw io_error(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw io_error("lattice file must be a JSON object");
  LatticeFile f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw io_error("field 'name' must be a string");
    f.name = j["name"].get<std::string>();
  }
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw io_error("field 'size' must be an integer");
  f.size = j["size"].get<int>();
  if (!j.contains("covers") || !j["covers"].is_array())
    throw io_error("field 'covers' must be an array of pairs");
  for (const auto& e : j["covers"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw io_error("cover entries must be [a, b] integer pairs");
    f.covers.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return f;
}

Lattice parse_lattice_file(const std::string& text, std::string* name_out) {
  LatticeFile f = lattice_file_parse(text);
  if (name_out) *name_out = f.name;
  return build_from_covers(f.size, f.covers);
}

std::string serialize_lattice(const Lattice& L, const std::string& name) {
  ordered_json j;
  if (!name.empty()) j["name"] = name;
  j["size"] = L.size();
  auto covers = L.covers();  // already sorted
  j["covers"] = json::array();
  for (auto [a, b] : covers) j["covers"].push_back({a, b});
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write file: " + path);
  out << content;
}

std::string export_dot(const Lattice& L, const std::vector<std::string>& labels,
                       const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < L.size(); ++v) {
    out << "  " << v;
    if (int(labels.size()) > v && !labels[v].empty())
      out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (int h = 0; h <= L.rank(); ++h) {
    std::vector<int> level;
    for (int v = 0; v < L.size(); ++v)
      if (L.height(v) == h) level.push_back(v);
    if (level.empty()) continue;
    out << "  { rank=same;";
    for (int v : level) out << " " << v << ";";
    out << " }\n";
  }
  for (auto [a, b] : L.covers()) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string property_report_json(const PropertyReport& rep) {
  ordered_json j;
  j["property"] = rep.property;
  j["holds"] = rep.holds;
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j.dump();
}

}  // namespace latmod
