// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oasforge/diagnostics.hpp"

#include <string_view>

namespace oasforge::log {

/// Current threshold; initialized from `OAS_FORGE_LOG` (default: warn).
Severity level() noexcept;
void set_level(Severity level) noexcept;

/// Writes `[level] message` to standard error when `severity` passes the threshold.
void write(Severity severity, std::string_view message);

inline void error(std::string_view m) { write(Severity::error, m); }
inline void warn(std::string_view m) { write(Severity::warning, m); }
inline void info(std::string_view m) { write(Severity::info, m); }
inline void debug(std::string_view m) { write(Severity::debug, m); }

/// Streams a diagnostic in its `CODE: message (file:line)` form.
void report(const Diagnostic& d);

} // namespace oasforge::log
