// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace oasforge {

/// Three-digit code for an `HttpStatus` constant name such as `NOT_FOUND`.
std::optional<std::string> status_code_for_name(std::string_view constant) noexcept;

/// Standard reason phrase for a code ("404" -> "Not Found"); codes without a
/// registered phrase yield "Status <code>".
std::string reason_phrase(std::string_view code);

/// True for a three-digit code in [100, 599].
bool is_status_code(std::string_view code) noexcept;

} // namespace oasforge
