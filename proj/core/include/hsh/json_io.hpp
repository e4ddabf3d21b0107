#ifndef HSH_JSON_IO_HPP
#define HSH_JSON_IO_HPP

#include <string>
#include <vector>

#include "hsh/tree.hpp"
#include "hsh/verify.hpp"

namespace hsh {

/// JSON grammar of the three document kinds (all parsers throw
/// std::invalid_argument naming the offending node path):
///   tree   {"leaf2": null} | {"leaf3": null}
///        | {"split": {"left": T, "right": T}} | {"axis": T}
///   index  {"m": int} | {"l": int, "m": int}
///        | {"J": int, "left": I, "right": I} | {"J": int, "child": I}
///   point  {"phi": num} | {"theta": num, "phi": num}
///        | {"theta": num, "left": P, "right": P} | {"theta": num, "child": P}

ParamTree tree_from_json(const std::string& text);
std::string tree_to_json(const ParamTree& tree);

HshIndex index_from_json(const std::string& text);
std::string index_to_json(const HshIndex& index);

HyperPoint point_from_json(const std::string& text);
std::string point_to_json(const HyperPoint& point);

/// A JSON array of point documents.
std::vector<HyperPoint> points_from_json(const std::string& text);

std::string report_to_json(const Report& report);

} // namespace hsh

#endif
