#ifndef SIXVERTEX_ERRORS_HPP
#define SIXVERTEX_ERRORS_HPP

#include <stdexcept>

namespace sixvertex {

/// Parameters at which a closed-form representation is undefined (0/0 limits).
class SingularConfiguration : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Request exceeds a size cap of an exhaustive oracle.
class ResourceLimit : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Model parameters are inconsistent (e.g. u^2 != x).
class ConsistencyError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

} // namespace sixvertex

#endif
