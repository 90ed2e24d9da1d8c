#ifndef HIRZEBRUCH_ERRORS_HPP
#define HIRZEBRUCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hirzebruch
{

// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Binary series operation on operands with different (wmax, qmax).
class truncation_mismatch : public error
{
public:
    using error::error;
};

// Input carries too few weights to produce the requested output order.
class truncation_deficit : public error
{
public:
    using error::error;
};

class not_a_unit : public error
{
public:
    using error::error;
};

// A precondition on the shape of a series (exp/log/substitute/integrate) failed.
class domain_error : public error
{
public:
    using error::error;
};

class out_of_range : public error
{
public:
    using error::error;
};

class unsupported_oracle : public error
{
public:
    using error::error;
};

class invalid_spec : public error
{
public:
    using error::error;
};

class missing_intersection : public error
{
public:
    using error::error;
};

class missing_coefficients : public error
{
public:
    using error::error;
};

class verification_failure : public error
{
public:
    using error::error;
};

} // namespace hirzebruch

#endif
