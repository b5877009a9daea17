#include "polyns/version.hpp"

namespace polyns {

std::string build_info() {
  std::string info = std::string(library_name) + " " + library_version;
#if defined(__VERSION__)
  info += "; compiler " __VERSION__;
#endif
  info += "; C++" + std::to_string(__cplusplus / 100 % 100);
  return info;
}

}  // namespace polyns
