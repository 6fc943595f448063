#pragma once

#include <sstream>
#include <string>

namespace derlab::detail {

inline std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

}  // namespace derlab::detail
