#pragma once

#include <stdexcept>
#include <string>

namespace maxsym {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MAXSYM_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

MAXSYM_DEFINE_ERROR(DomainError);
MAXSYM_DEFINE_ERROR(NotASubgroup);
MAXSYM_DEFINE_ERROR(RankDeficient);
MAXSYM_DEFINE_ERROR(UnknownGroup);
MAXSYM_DEFINE_ERROR(FrameMismatch);
MAXSYM_DEFINE_ERROR(ClosureOverflow);
MAXSYM_DEFINE_ERROR(UnmatchedLattice);
MAXSYM_DEFINE_ERROR(SignatureCountMismatch);
MAXSYM_DEFINE_ERROR(Disconnected);
MAXSYM_DEFINE_ERROR(ConstraintFitError);

#undef MAXSYM_DEFINE_ERROR

}  // namespace maxsym
