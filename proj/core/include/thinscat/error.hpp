#pragma once

#include <stdexcept>
#include <string>

namespace thinscat {

// Every failure raised by the library derives from Error. The subclasses map
// onto the CLI exit codes: InvalidArgument -> 2, NumericalError and
// SingularityError -> 3, InfeasibleTarget -> 4.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Input outside the documented domain of an operation.
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

// Argument outside the range where a special function is implemented.
class DomainError : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

// Evaluation at a kernel singularity or inside a scatterer.
class SingularityError : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

// Capacity limits (solver cap, grid resolution, packing).
class CapacityError : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

class NumericalError : public Error
{
  public:
    using Error::Error;
};

// A per-mode denominator of the disc problem vanished.
class ResonanceError : public NumericalError
{
  public:
    using NumericalError::NumericalError;
};

class SingularMatrixError : public NumericalError
{
  public:
    SingularMatrixError(std::string const& what, double rcond)
        : NumericalError(what), rcond_(rcond)
    {
    }

    //! Reciprocal condition estimate at the time of failure.
    double rcond() const noexcept { return rcond_; }

  private:
    double rcond_;
};

// A requested refraction coefficient cannot be realized by any density N >= 0.
class InfeasibleTarget : public Error
{
  public:
    using Error::Error;
};

}  // namespace thinscat
