// SPDX-License-Identifier: Apache-2.0
#include "oasforge/http_status.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace oasforge {

namespace {

struct StatusEntry {
    std::string_view name;
    std::string_view code;
    std::string_view reason;
};

// Constant names follow the framework's HttpStatus enum, including the
// deprecated aliases still found in older code bases.
constexpr StatusEntry kStatuses[] = {
    {"CONTINUE", "100", "Continue"},
    {"SWITCHING_PROTOCOLS", "101", "Switching Protocols"},
    {"PROCESSING", "102", "Processing"},
    {"EARLY_HINTS", "103", "Early Hints"},
    {"CHECKPOINT", "103", "Early Hints"},
    {"OK", "200", "OK"},
    {"CREATED", "201", "Created"},
    {"ACCEPTED", "202", "Accepted"},
    {"NON_AUTHORITATIVE_INFORMATION", "203", "Non-Authoritative Information"},
    {"NO_CONTENT", "204", "No Content"},
    {"RESET_CONTENT", "205", "Reset Content"},
    {"PARTIAL_CONTENT", "206", "Partial Content"},
    {"MULTI_STATUS", "207", "Multi-Status"},
    {"ALREADY_REPORTED", "208", "Already Reported"},
    {"IM_USED", "226", "IM Used"},
    {"MULTIPLE_CHOICES", "300", "Multiple Choices"},
    {"MOVED_PERMANENTLY", "301", "Moved Permanently"},
    {"FOUND", "302", "Found"},
    {"MOVED_TEMPORARILY", "302", "Found"},
    {"SEE_OTHER", "303", "See Other"},
    {"NOT_MODIFIED", "304", "Not Modified"},
    {"USE_PROXY", "305", "Use Proxy"},
    {"TEMPORARY_REDIRECT", "307", "Temporary Redirect"},
    {"PERMANENT_REDIRECT", "308", "Permanent Redirect"},
    {"BAD_REQUEST", "400", "Bad Request"},
    {"UNAUTHORIZED", "401", "Unauthorized"},
    {"PAYMENT_REQUIRED", "402", "Payment Required"},
    {"FORBIDDEN", "403", "Forbidden"},
    {"NOT_FOUND", "404", "Not Found"},
    {"METHOD_NOT_ALLOWED", "405", "Method Not Allowed"},
    {"NOT_ACCEPTABLE", "406", "Not Acceptable"},
    {"PROXY_AUTHENTICATION_REQUIRED", "407", "Proxy Authentication Required"},
    {"REQUEST_TIMEOUT", "408", "Request Timeout"},
    {"CONFLICT", "409", "Conflict"},
    {"GONE", "410", "Gone"},
    {"LENGTH_REQUIRED", "411", "Length Required"},
    {"PRECONDITION_FAILED", "412", "Precondition Failed"},
    {"PAYLOAD_TOO_LARGE", "413", "Payload Too Large"},
    {"REQUEST_ENTITY_TOO_LARGE", "413", "Payload Too Large"},
    {"URI_TOO_LONG", "414", "URI Too Long"},
    {"REQUEST_URI_TOO_LONG", "414", "URI Too Long"},
    {"UNSUPPORTED_MEDIA_TYPE", "415", "Unsupported Media Type"},
    {"REQUESTED_RANGE_NOT_SATISFIABLE", "416", "Range Not Satisfiable"},
    {"EXPECTATION_FAILED", "417", "Expectation Failed"},
    {"I_AM_A_TEAPOT", "418", "I'm a teapot"},
    {"INSUFFICIENT_SPACE_ON_RESOURCE", "419", "Insufficient Space On Resource"},
    {"METHOD_FAILURE", "420", "Method Failure"},
    {"DESTINATION_LOCKED", "421", "Destination Locked"},
    {"UNPROCESSABLE_ENTITY", "422", "Unprocessable Entity"},
    {"LOCKED", "423", "Locked"},
    {"FAILED_DEPENDENCY", "424", "Failed Dependency"},
    {"TOO_EARLY", "425", "Too Early"},
    {"UPGRADE_REQUIRED", "426", "Upgrade Required"},
    {"PRECONDITION_REQUIRED", "428", "Precondition Required"},
    {"TOO_MANY_REQUESTS", "429", "Too Many Requests"},
    {"REQUEST_HEADER_FIELDS_TOO_LARGE", "431", "Request Header Fields Too Large"},
    {"UNAVAILABLE_FOR_LEGAL_REASONS", "451", "Unavailable For Legal Reasons"},
    {"INTERNAL_SERVER_ERROR", "500", "Internal Server Error"},
    {"NOT_IMPLEMENTED", "501", "Not Implemented"},
    {"BAD_GATEWAY", "502", "Bad Gateway"},
    {"SERVICE_UNAVAILABLE", "503", "Service Unavailable"},
    {"GATEWAY_TIMEOUT", "504", "Gateway Timeout"},
    {"HTTP_VERSION_NOT_SUPPORTED", "505", "HTTP Version Not Supported"},
    {"VARIANT_ALSO_NEGOTIATES", "506", "Variant Also Negotiates"},
    {"INSUFFICIENT_STORAGE", "507", "Insufficient Storage"},
    {"LOOP_DETECTED", "508", "Loop Detected"},
    {"BANDWIDTH_LIMIT_EXCEEDED", "509", "Bandwidth Limit Exceeded"},
    {"NOT_EXTENDED", "510", "Not Extended"},
    {"NETWORK_AUTHENTICATION_REQUIRED", "511", "Network Authentication Required"},
};

} // namespace

std::optional<std::string> status_code_for_name(std::string_view constant) noexcept
{
    auto it = std::find_if(std::begin(kStatuses), std::end(kStatuses),
                           [&](const StatusEntry& e) { return e.name == constant; });
    if (it == std::end(kStatuses))
        return std::nullopt;
    return std::string(it->code);
}

std::string reason_phrase(std::string_view code)
{
    auto it = std::find_if(std::begin(kStatuses), std::end(kStatuses),
                           [&](const StatusEntry& e) { return e.code == code; });
    if (it == std::end(kStatuses))
        return "Status " + std::string(code);
    return std::string(it->reason);
}

bool is_status_code(std::string_view code) noexcept
{
    return code.size() == 3 && code[0] >= '1' && code[0] <= '5' &&
           std::isdigit(static_cast<unsigned char>(code[1])) &&
           std::isdigit(static_cast<unsigned char>(code[2]));
}

} // namespace oasforge
