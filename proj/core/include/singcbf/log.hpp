#pragma once

#include <string>

namespace singcbf {

enum class LogLevel { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity comes from the SINGCBF_LOG environment variable
/// (quiet|warn|info|debug), default warn. Messages go to stderr.
LogLevel log_level();

void log_warn(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace singcbf
