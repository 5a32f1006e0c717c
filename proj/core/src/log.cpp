#include "singcbf/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace singcbf {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SINGCBF_LOG");
    if (!env) return LogLevel::Warn;
    if (std::strcmp(env, "quiet") == 0) return LogLevel::Quiet;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

namespace {
void emit(LogLevel at, const char* tag, const std::string& msg) {
  if (static_cast<int>(log_level()) >= static_cast<int>(at))
    std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}
}  // namespace

void log_warn(const std::string& msg) { emit(LogLevel::Warn, "warn", msg); }
void log_info(const std::string& msg) { emit(LogLevel::Info, "info", msg); }
void log_debug(const std::string& msg) { emit(LogLevel::Debug, "debug", msg); }

}  // namespace singcbf
