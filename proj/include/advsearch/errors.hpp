// Exception hierarchy shared by all advsearch modules.

#ifndef ADVSEARCH_ERRORS_HPP
#define ADVSEARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace advsearch {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or configuration (bad fraction, empty dataset, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Enumeration requested on a space larger than the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A substitution pair violates the attack-space contract.
class InvalidSubstitution : public Error {
public:
    using Error::Error;
};

// An uncached oracle query would exceed the query budget.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

// A perturbation was requested on an utterance with no candidate positions.
class EmptySpace : public Error {
public:
    using Error::Error;
};

// The external scoring process answered with a malformed message.
class ProtocolError : public Error {
public:
    using Error::Error;
};

// The external scoring process is unreachable, timed out, or hung up.
class TransportError : public Error {
public:
    using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace advsearch

#endif // ADVSEARCH_ERRORS_HPP
