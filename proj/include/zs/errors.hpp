#pragma once

#include <stdexcept>
#include <string>

namespace zs {

// Base for all library errors. `code()` is a stable machine-readable tag;
// the CLI maps it into the JSON error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Element/ctx shape mismatch (wrong rank, wrong kind, residue out of range).
struct ContextMismatchError : Error {
    explicit ContextMismatchError(const std::string& msg) : Error("context_mismatch", msg) {}
};

// Exact int64 arithmetic would wrap; we never wrap silently.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error("overflow", msg) {}
};

// An instance exceeds a configured budget (set-size cap, node budget, window guard).
struct SizeGuardError : Error {
    explicit SizeGuardError(const std::string& msg) : Error("size_guard", msg) {}
};

// A precondition on the mathematical input is violated (not decomposable, bad n, ...).
struct DomainError : Error {
    DomainError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
    explicit DomainError(const std::string& msg) : Error("domain_error", msg) {}
};

// An internal consistency check failed; indicates a bug, never user error.
struct InternalCheckError : Error {
    explicit InternalCheckError(const std::string& msg) : Error("internal_check", msg) {}
};

}  // namespace zs
