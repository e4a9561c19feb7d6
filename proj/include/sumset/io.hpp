#pragma once

#include <string>
#include <vector>

#include "sumset/partitions.hpp"
#include "sumset/rational.hpp"
#include "sumset/regions.hpp"
#include "sumset/set1d.hpp"

namespace sumset {

// Set files: {"intervals": [["0","1"], ["2","3"], ...]} with rational
// endpoint strings ("3" or "4/3"). Serialization is always in lowest terms
// and normalized order, so parse -> serialize -> parse is the identity.
CompactSet1D set_from_json_text(const std::string& text);
std::string set_to_json_text(const CompactSet1D& a);

CompactSet1D read_set_file(const std::string& path);
void write_set_file(const std::string& path, const CompactSet1D& a);

// Set systems: {"sets": [ <set object>, ... ]}.
SetSystem system_from_json_text(const std::string& text);
std::string system_to_json_text(const SetSystem& sys);
SetSystem read_system_file(const std::string& path);

// Partitions: {"m": 3, "edges": [{"set": [1,2], "weight": "1/2"}, ...]},
// 1-based members; weights as rational strings (bare integers also accepted).
FractionalPartition partition_from_json_text(const std::string& text);
std::string partition_to_json_text(const FractionalPartition& p);
FractionalPartition read_partition_file(const std::string& path);

// Region points: {"m": 3, "values": {"1": "...", ..., "1,2,3": "..."},
// "vector": ["0", ...]} — the values map keyed by comma-joined subsets and
// the canonical vector (empty set first) in size-then-lexicographic order.
std::string region_point_to_json_text(const RegionPoint& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sumset
