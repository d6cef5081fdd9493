#pragma once

#include <stdexcept>
#include <string>

namespace metacyclic {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The presentation data does not describe a valid split metacyclic p-group.
class validation_error : public error {
public:
    using error::error;
};

/// A computation was requested on a group larger than the configured bound,
/// or an intermediate value would not fit the exact integer width.
class size_bound_error : public error {
public:
    using error::error;
};

/// Two routes that must agree did not. Never a user error.
class internal_inconsistency : public error {
public:
    using error::error;
};

} // namespace metacyclic
