#pragma once

#include <stdexcept>
#include <string>

namespace sandpilion {

/// Bad parameters or arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Spanning-tree count requested for a graph that is not connected.
class DisconnectedGraph : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact enumeration would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity that must hold did not (e.g. a division that must be exact).
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sandpilion
