#pragma once

#include <stdexcept>
#include <string>

namespace zxmbqc {

// Every failure raised by the library derives from Error so callers can
// catch the family and still discriminate on the concrete type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ZXMBQC_ERROR(Name)                          \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what) : Error(what) {} \
  }

ZXMBQC_ERROR(SelfLoop);
ZXMBQC_ERROR(UnknownNode);
ZXMBQC_ERROR(UnknownEdge);
ZXMBQC_ERROR(ArityMismatch);
ZXMBQC_ERROR(ShapeMismatch);
ZXMBQC_ERROR(KindMismatch);
ZXMBQC_ERROR(NotAdjacent);
ZXMBQC_ERROR(WouldSelfLoop);
ZXMBQC_ERROR(PreconditionFailed);
ZXMBQC_ERROR(WidthTooLarge);
ZXMBQC_ERROR(NotPromise);
ZXMBQC_ERROR(NotGraphLike);
ZXMBQC_ERROR(NotChain);
ZXMBQC_ERROR(ReductionStuck);
ZXMBQC_ERROR(ParseError);

#undef ZXMBQC_ERROR

}  // namespace zxmbqc
