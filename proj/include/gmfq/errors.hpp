#pragma once

#include <stdexcept>
#include <string>

namespace gmfq {

// Base class for all library errors. Subclasses map onto the CLI's
// distinct exit codes (see tools/gmfq_main.cpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid mathematical input: empty sieve range, n = 0, interval outside
// [-1,1], inverting a non-unit series, CM form where a non-CM one is
// required, degenerate pair, unsupported eta quotient.
struct DomainError : Error {
    using Error::Error;
};

// Mismatched truncation orders or insufficient coefficient range.
struct ShapeError : Error {
    using Error::Error;
};

// Unknown catalogue level.
struct CatalogueError : Error {
    using Error::Error;
};

// Data that must agree does not: backend mismatch, Deligne violation,
// missing a_p for a requested prime.
struct IntegrityError : Error {
    using Error::Error;
};

// File-system problems: unreadable cache, malformed CSV, unwritable output.
struct IoError : Error {
    using Error::Error;
};

} // namespace gmfq
