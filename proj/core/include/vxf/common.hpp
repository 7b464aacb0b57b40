#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vxf {

// Extent list of a dense row-major array. Scalars use shape {1}.
using Shape = std::vector<int64_t>;

inline int64_t numel_of(const Shape& s) {
  int64_t n = 1;
  for (int64_t e : s) n *= e;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

namespace detail {
inline void cat_into(std::ostringstream&) {}
template <class A, class... Rest>
void cat_into(std::ostringstream& os, const A& a, const Rest&... rest) {
  os << a;
  cat_into(os, rest...);
}
}  // namespace detail

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  detail::cat_into(os, args...);
  return os.str();
}

// Contract violations (bad shapes, bad arguments).
template <class... Args>
void check(bool cond, const Args&... args) {
  if (!cond) throw std::invalid_argument(cat(args...));
}

// Environment/runtime failures (I/O, corrupt files).
template <class... Args>
void require(bool cond, const Args&... args) {
  if (!cond) throw std::runtime_error(cat(args...));
}

}  // namespace vxf
