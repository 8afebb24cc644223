#pragma once

#include <string>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Builds a ring from a compact left-to-right spec string:
//   z:<n>            Z_n
//   zmul:<n>         additive Z_n with zero multiplication
//   gf:<p>:<n>       GF(p^n)
//   mat:<spec>:<k>   k x k matrices over <spec>
//   tri:<spec>:<k>   upper-triangular k x k matrices over <spec>
//   prod:<spec>,<spec>
//   table:<path>     JSON operation tables (path ends at ',' or end of spec)
// e.g. tri:gf:2:2:2 is the 2x2 upper-triangular ring over GF(4).
Ring parse_ring_spec(const std::string& spec, const Config& cfg = Config::defaults());

}  // namespace ringlab
