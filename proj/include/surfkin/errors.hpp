#ifndef SURFKIN_ERRORS_HPP
#define SURFKIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surfkin {

struct ImmersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UmbilicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDeformation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MinimalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BendingAngleSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset(offset) {}
    std::size_t offset;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace surfkin

#endif
