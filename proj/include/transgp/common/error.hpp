#ifndef TRANSGP_COMMON_ERROR_HPP_
#define TRANSGP_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace transgp {

// Base of every error the toolkit raises on purpose. The CLI maps the three
// families below onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class RuntimeFailure : public Error {
 public:
  using Error::Error;
};

#define TRANSGP_DEFINE_ERROR(Name, Base) \
  class Name : public Base {             \
   public:                               \
    using Base::Base;                    \
  }

TRANSGP_DEFINE_ERROR(MalformedSequence, RuntimeFailure);
TRANSGP_DEFINE_ERROR(IndexOutOfRange, RuntimeFailure);
TRANSGP_DEFINE_ERROR(InvalidConfig, ConfigError);
TRANSGP_DEFINE_ERROR(EmptySubpopulation, RuntimeFailure);
TRANSGP_DEFINE_ERROR(CrossTaskComparison, RuntimeFailure);
TRANSGP_DEFINE_ERROR(InsufficientGenerations, RuntimeFailure);
TRANSGP_DEFINE_ERROR(FormatVersionMismatch, IoError);
TRANSGP_DEFINE_ERROR(ShapeMismatch, IoError);
TRANSGP_DEFINE_ERROR(ParseError, IoError);
TRANSGP_DEFINE_ERROR(SequenceTooLong, RuntimeFailure);
TRANSGP_DEFINE_ERROR(EmptyDataset, RuntimeFailure);
TRANSGP_DEFINE_ERROR(RegenerationOverflow, RuntimeFailure);
TRANSGP_DEFINE_ERROR(InvalidSize, RuntimeFailure);

#undef TRANSGP_DEFINE_ERROR

}  // namespace transgp

#endif  // TRANSGP_COMMON_ERROR_HPP_
