#pragma once

// File formats.
//
// Golden numbers serialize as four integers [a_num, a_den, b_num, b_den]
// meaning a_num/a_den + (b_num/b_den) phi, with positive denominators.
// Integers outside the 64-bit range are written as decimal strings.
//
// Patch JSON:
//   { "format": "ammann-patch/1", "provenance": ...,
//     "config": { "radius": golden, "shift": [golden x3],
//                 "window": [ {"normal": [golden x3], "offset": golden} x30 ] },
//     "tiles": [ { "lattice_origin": [6 ints], "axis_triple": [i,j,k],
//                  "anchor": [golden x3], "edges": [[golden x3] x3],
//                  "type": "oblate" | "prolate" }, ... ] }
//
// OBJ: one object per tile named "<type>_<index>", 8 vertices and 6 quads,
// coordinates evaluated at phi = (1+sqrt5)/2.

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ammann/delzant.hpp"
#include "ammann/tiling.hpp"

namespace ammann {

inline constexpr std::string_view kPatchFormat = "ammann-patch/1";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [a_num, a_den, b_num, b_den] as compact JSON text.
std::string golden_to_json(const Golden& x);
Golden golden_from_json(std::string_view text);

/// Deterministic, two-space indented JSON.
std::string patch_to_json(const Patch& patch);
/// Throws ParseError on malformed input.
Patch patch_from_json(std::string_view text);

std::string delzant_to_json(const DelzantResult& result);

void write_obj(std::ostream& out, const Patch& patch);

}  // namespace ammann
