// SPDX-License-Identifier: Apache-2.0
#include "oasforge/logging.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace oasforge::log {

namespace {

Severity initial_level() noexcept
{
    const char* env = std::getenv("OAS_FORGE_LOG");
    return env ? parse_severity(env, Severity::warning) : Severity::warning;
}

std::atomic<Severity>& threshold() noexcept
{
    static std::atomic<Severity> value{initial_level()};
    return value;
}

std::mutex& stream_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

Severity level() noexcept { return threshold().load(); }
void set_level(Severity level) noexcept { threshold().store(level); }

void write(Severity severity, std::string_view message)
{
    if (severity > level())
        return;
    std::lock_guard lock(stream_mutex());
    std::cerr << '[' << to_string(severity) << "] " << message << '\n';
}

void report(const Diagnostic& d)
{
    if (d.severity > level())
        return;
    std::lock_guard lock(stream_mutex());
    std::cerr << d.render() << '\n';
}

} // namespace oasforge::log
