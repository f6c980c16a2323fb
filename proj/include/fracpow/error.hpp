#ifndef FRACPOW_ERROR_HPP
#define FRACPOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fracpow
{

// Base of every exception thrown by the library. kind() is the stable,
// machine-readable tag used in the CLI's error JSON.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept
    {
        return "error";
    }
};

// An argument lies outside the mathematical domain of an operation.
class domain_error : public error
{
public:
    using error::error;
    const char *kind() const noexcept override
    {
        return "domain_error";
    }
};

// The caller combined valid values in an invalid way (mismatched cutoffs,
// scan beyond a safe bound, malformed flag).
class usage_error : public error
{
public:
    using error::error;
    const char *kind() const noexcept override
    {
        return "usage_error";
    }
};

// A theorem's standing hypothesis does not hold for the given input.
class hypothesis_error : public error
{
public:
    using error::error;
    const char *kind() const noexcept override
    {
        return "hypothesis_error";
    }
};

// Input exceeds a configured desk-scale limit (sieve size, int64 counts).
class capacity_error : public error
{
public:
    using error::error;
    const char *kind() const noexcept override
    {
        return "capacity_error";
    }
};

class not_invertible_error : public domain_error
{
public:
    using domain_error::domain_error;
    const char *kind() const noexcept override
    {
        return "not_invertible_error";
    }
};

class precondition_error : public domain_error
{
public:
    using domain_error::domain_error;
    const char *kind() const noexcept override
    {
        return "precondition_error";
    }
};

} // namespace fracpow

#endif
