#pragma once

#include <stdexcept>
#include <string>

namespace argonaut {

/// Malformed or out-of-contract input to a core operation.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input exceeds a hard size bound of the chosen algorithm.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// A scenario or framework file failed schema or referential validation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A file could not be read or parsed at all.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Message delivery attempted on a closed session.
class DeliveryError : public std::runtime_error {
public:
    explicit DeliveryError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace argonaut
