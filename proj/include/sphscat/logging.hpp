// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdarg>
#include <cstdio>
#include <cstdlib>

namespace sphscat {

// Diagnostic verbosity, controlled by the SPHERE_SCATTER_LOG environment
// variable: 0 (default) silent, 1 info, 2 debug. Messages go to stderr.
inline int log_level() {
  static const int level = [] {
    const char* env = std::getenv("SPHERE_SCATTER_LOG");
    return env ? std::atoi(env) : 0;
  }();
  return level;
}

inline void log_msg(int level, const char* fmt, ...) {
  if (log_level() < level) return;
  std::va_list args;
  va_start(args, fmt);
  std::fprintf(stderr, "[sphscat] ");
  std::vfprintf(stderr, fmt, args);
  std::fprintf(stderr, "\n");
  va_end(args);
}

}  // namespace sphscat
