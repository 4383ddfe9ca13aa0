#pragma once

// GFLD v1 text field files.
//
//   gfld 1
//   group <u1|su2|su2xu1|affine>
//   kind <connection|curvature|group|scalar|momentum>
//   dims <m> <n_1> ... <n_m>
//   spacing <h_1> ... <h_m>
//   <one line per site, lexicographic, axis 0 slowest>
//
// Site values are space-separated "re,im" pairs printed with %.17g.
// Matrices are row-major; one-forms list component i then algebra index a;
// two-forms and momenta list (i, j) with i < j, then a. Momentum values are
// the raw coefficients p_a^{ij}; the cell volume h^m is implicit.

#include <iosfwd>
#include <string>

#include "dfm/lattice.hpp"

namespace dfm {

void write_field(std::ostream& out, const LatticeField& field);
std::string serialize_field(const LatticeField& field);

// Throws ParseError naming the offending line.
LatticeField read_field(std::istream& in);
LatticeField parse_field(const std::string& text);

LatticeField load_field(const std::string& path);
void save_field(const std::string& path, const LatticeField& field);

}  // namespace dfm
