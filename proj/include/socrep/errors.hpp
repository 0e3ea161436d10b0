#pragma once

#include <stdexcept>
#include <string>

namespace socrep {

// Exit code mapping used by the CLI: invalid input 1, search cap/budget 2,
// internal consistency 3.

class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class InternalConsistency : public std::logic_error {
public:
    explicit InternalConsistency(const std::string& what) : std::logic_error(what) {}
};

/// A configured search limit (brute-force size cap, traversal budget) was hit.
class SearchLimit : public std::runtime_error {
public:
    explicit SearchLimit(const std::string& what) : std::runtime_error(what) {}
};

class NotSuccessive : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class CorruptCatalog : public std::runtime_error {
public:
    explicit CorruptCatalog(const std::string& what) : std::runtime_error(what) {}
};

class MalformedConfiguration : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class RefuseToEmit : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

}  // namespace socrep
