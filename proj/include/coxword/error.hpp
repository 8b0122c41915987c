#ifndef COXWORD_ERROR_HPP_
#define COXWORD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace coxword {

  // Base class for every error raised by the library.
  class CoxwordError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define COXWORD_DEFINE_ERROR(Name)                                  \
  class Name : public CoxwordError {                                \
   public:                                                          \
    explicit Name(std::string const& what) : CoxwordError(what) {} \
  }

  COXWORD_DEFINE_ERROR(InvalidMatrix);
  COXWORD_DEFINE_ERROR(InvalidStar);
  COXWORD_DEFINE_ERROR(InfiniteParabolic);
  COXWORD_DEFINE_ERROR(NotStarInvariant);
  COXWORD_DEFINE_ERROR(NotTwistedInvolution);
  COXWORD_DEFINE_ERROR(NotInvolutionWord);
  COXWORD_DEFINE_ERROR(NotInvolution);
  COXWORD_DEFINE_ERROR(InvalidWindow);
  COXWORD_DEFINE_ERROR(UnknownType);
  COXWORD_DEFINE_ERROR(UnknownSystem);
  COXWORD_DEFINE_ERROR(UnknownSuite);
  COXWORD_DEFINE_ERROR(BoundExceeded);
  COXWORD_DEFINE_ERROR(ClosureBoundExceeded);
  COXWORD_DEFINE_ERROR(ParseError);

#undef COXWORD_DEFINE_ERROR

}  // namespace coxword

#endif  // COXWORD_ERROR_HPP_
