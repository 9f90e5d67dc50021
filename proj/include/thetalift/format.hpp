#pragma once

#include <sstream>
#include <string>

#include "thetalift/domain.hpp"

namespace thetalift {

// String formats used by the CLI and the python layer:
//   rational      "p/q" or "p"
//   TorsionCoord  "u,v"
//   TorsionPoint  "u1,v1;u2,v2"
//   Mat2          "a,b;c,d"
//   complex       "re+im*i" (also "i", "re", "im*i")
//   tau           "i", "x+yi", or "cm:p,q"

Rat parse_rat(const std::string& s);
TorsionCoord parse_coord(const std::string& s);
TorsionPoint parse_point(const std::string& s);
Mat2Q parse_mat(const std::string& s);
cplx parse_complex(const std::string& s);
UpperHalfPoint parse_tau(const std::string& s);
TorsionCycle parse_cycle(const std::string& s);  // "c1*u1,v1;u2,v2 + c2*..."

std::string to_string(const Rat& r);
std::string to_string(const TorsionCoord& c);
std::string to_string(const TorsionPoint& p);
std::string to_string(const Mat2Q& m);
std::string to_string(const cplx& z);

}  // namespace thetalift
