#pragma once

#include <stdexcept>
#include <string>

namespace guidroid {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- view-hierarchy / manifest parsing ---

class MalformedDocument : public Error {
public:
    using Error::Error;
};

class EmptyPage : public Error {
public:
    using Error::Error;
};

class MissingField : public Error {
public:
    using Error::Error;
};

// --- app model loading ---

/// Carries a JSON-pointer-like path to the offending field.
class SchemaViolation : public Error {
public:
    SchemaViolation(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class DanglingReference : public Error {
public:
    using Error::Error;
};

// --- drivers ---

class DeviceGone : public Error {
public:
    using Error::Error;
};

// --- chat backends ---

class TransportError : public Error {
public:
    using Error::Error;
};

class ScriptExhausted : public Error {
public:
    using Error::Error;
};

class RateLimited : public Error {
public:
    using Error::Error;
};

// --- prompt assembly ---

class PromptTooLarge : public Error {
public:
    using Error::Error;
};

// --- configuration ---

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace guidroid
