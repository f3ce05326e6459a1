#ifndef SYMF_IO_HPP
#define SYMF_IO_HPP

#include <string>

#include "json.hpp"
#include "symf/matrix.hpp"
#include "symf/tau.hpp"

namespace symf {

using Json = nlohmann::ordered_json;

// All readers throw ParseError on malformed input.

// [{"params": {"t": 2}, "value": "-1/2"}, ...], constant term first, then by
// name-sorted parameter lists.
Json coef_to_json(const CoefPoly& c);
// Also accepts a rational string or an integer.
CoefPoly coef_from_json(const Json& j);

// {"terms": [{"pmono": [...], "coef": [...]}, ...]}, pmono reverse-lexicographic.
Json symfun_to_json(const SymFun& f);
SymFun symfun_from_json(const Json& j);

// {"charge": m, "body": SymFun}. Readers also take a bare SymFun (charge 0).
Json state_to_json(const ChargedState& s);
ChargedState state_from_json(const Json& j);

Json tensor_to_json(const TensorElt& t);

// Matrix spec: {"kind": ..., "default": ..., "rows": [...], "params": {...}}.
RowFiniteMatrix matrix_from_json(const Json& j);

// Rows i in [lo, hi], entries with j <= jmax.
Json matrix_window_to_json(const RowFiniteMatrix& a, int lo, int hi, int jmax);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

// "3,-1,2" -> {3, -1, 2}; empty string -> {}.
IntVec parse_intvec(const std::string& text);
// "1/2,1/3" -> rationals.
std::vector<Rat> parse_rat_list(const std::string& text);
// "lo:hi".
std::pair<int, int> parse_range(const std::string& text);
// "t=-1" -> (t, -1).
std::pair<std::string, Rat> parse_assignment(const std::string& text);

}  // namespace symf

#endif
