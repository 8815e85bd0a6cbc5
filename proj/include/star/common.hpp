#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace star {

using Shape = std::vector<std::size_t>;

inline std::size_t numel(const Shape& s) {
  std::size_t n = 1;
  for (auto d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

[[noreturn]] inline void fail(const char* file, int line, const std::string& msg) {
  std::ostringstream os;
  os << file << ':' << line << ": " << msg;
  throw std::runtime_error(os.str());
}

}  // namespace star

#define STAR_CHECK(cond, msg)                              \
  do {                                                     \
    if (!(cond)) {                                         \
      std::ostringstream star_os_;                         \
      star_os_ << "check failed (" #cond "): " << msg;     \
      ::star::fail(__FILE__, __LINE__, star_os_.str());    \
    }                                                      \
  } while (false)
