#pragma once

#include <string>

// Thin logging front end. spdlog lives in its own translation unit because the
// torch headers ship an fmt release that the system spdlog cannot build with.
namespace stedit::log {

void info(const std::string& msg);
void warn(const std::string& msg);
void error(const std::string& msg);

/// "debug", "info", "warn", "error" or "off".
void set_level(const std::string& level);

/// Fixed-point formatting for log messages.
std::string fixed(double v, int digits = 5);

}  // namespace stedit::log
