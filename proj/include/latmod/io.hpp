#pragma once

#include "latmod/lattice.hpp"
#include "latmod/properties.hpp"

#include <string>
#include <vector>

namespace latmod {

// On-disk lattice: {"name"?: str, "size": n, "covers": [[a,b], ...]}.
// Serialization is normalized (sorted covers, fixed key order), so the
// round trip is byte-identical.
struct LatticeFile {
  std::string name;  // empty = absent
  int size = 0;
  CoverList covers;
};

LatticeFile lattice_file_parse(const std::string& text);
Lattice parse_lattice_file(const std::string& text,
                           std::string* name_out = nullptr);
std::string serialize_lattice(const Lattice& L, const std::string& name = "");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Hasse diagram as DOT: one node per element, one upward edge per cover,
// elements of equal height on the same rank. Deterministic.
std::string export_dot(const Lattice& L,
                       const std::vector<std::string>& labels = {},
                       const std::string& name = "lattice");

std::string property_report_json(const PropertyReport& rep);

}  // namespace latmod
