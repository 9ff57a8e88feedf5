#pragma once

#include <stdexcept>
#include <string>

namespace groupalg {

// Base class for all domain failures raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external input: ring spec strings, graph/groupoid JSON documents.
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Arguments that do not belong to the structure they are used with
// (ring kind mismatch, unknown unit, non-composable arrows, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

} // namespace groupalg
