#pragma once

#include <stdexcept>
#include <string>

namespace betkit {

// Base class for all domain errors raised by the library. The CLI maps any
// Error to exit code 1; usage problems (bad flags, unreadable files) map to 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A serialized table or bit-indexed object lacks a required entry.
class MissingEntry : public Error {
public:
    explicit MissingEntry(const std::string& what) : Error(what) {}
};

// A node or prefix lies beyond the finite depth of the object addressed.
class DepthExceeded : public Error {
public:
    explicit DepthExceeded(const std::string& what) : Error(what) {}
};

// Two objects that must share a depth do not.
class DepthMismatch : public Error {
public:
    explicit DepthMismatch(const std::string& what) : Error(what) {}
};

// An operation needing positive initial capital was given capital zero.
class ZeroInitialCapital : public Error {
public:
    explicit ZeroInitialCapital(const std::string& what) : Error(what) {}
};

// A string set that must be prefix-free contains a prefix pair.
class NotPrefixFree : public Error {
public:
    explicit NotPrefixFree(const std::string& what) : Error(what) {}
};

// A construction's stated precondition fails; the message names the clause.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// A bias or bet parameter lies outside its admissible interval.
class QOutOfRange : public Error {
public:
    explicit QOutOfRange(const std::string& what) : Error(what) {}
};

// A table fails the sidedness property required by the transform applied.
class NotFSided : public Error {
public:
    explicit NotFSided(const std::string& what) : Error(what) {}
};

// A mixture truncation parameter is unusable.
class TruncationInvalid : public Error {
public:
    explicit TruncationInvalid(const std::string& what) : Error(what) {}
};

// A level-set test offers no levels to draw from.
class TestExhausted : public Error {
public:
    explicit TestExhausted(const std::string& what) : Error(what) {}
};

// Accepting a description request would push a ledger past its weight budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// An exhaustive search space is larger than the guard allows.
class EnumerationTooLarge : public Error {
public:
    explicit EnumerationTooLarge(const std::string& what) : Error(what) {}
};

// Input text failed to parse as the expected format.
class ParseFailure : public Error {
public:
    explicit ParseFailure(const std::string& what) : Error(what) {}
};

// A savings checkpoint does not exceed the initial capital.
class InvalidCheckpoint : public Error {
public:
    explicit InvalidCheckpoint(const std::string& what) : Error(what) {}
};

// An accuracy parameter lies outside (0, 1).
class EpsOutOfRange : public Error {
public:
    explicit EpsOutOfRange(const std::string& what) : Error(what) {}
};

// A string claimed to extend another does not.
class NotAnExtension : public Error {
public:
    explicit NotAnExtension(const std::string& what) : Error(what) {}
};

}  // namespace betkit
