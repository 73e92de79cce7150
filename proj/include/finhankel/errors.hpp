#pragma once

#include <stdexcept>
#include <string>

namespace finhankel {

/// Argument outside the mathematical domain of an operation (x < 0, r <= 0, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma evaluated at a nonpositive integer.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A hypothesis required by one of the asymptotic results does not hold.
/// The CLI maps this family to exit code 4.
class hypothesis_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A profile violates one of its construction invariants.
class invalid_profile : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

class incompatible_ladder : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

class exponent_collision : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

class not_applicable : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

class smoothness_budget : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

class empty_prediction : public hypothesis_error {
public:
    using hypothesis_error::hypothesis_error;
};

/// A closure rule was applied to children that do not satisfy its premise.
class rule_violation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed profile document (bad JSON, wrong types, unknown keys).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace finhankel
