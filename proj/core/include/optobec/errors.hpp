#pragma once

#include <stdexcept>
#include <string>

namespace optobec {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define OPTOBEC_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

OPTOBEC_DEFINE_ERROR(MissingField);
OPTOBEC_DEFINE_ERROR(NonPositiveInput);
OPTOBEC_DEFINE_ERROR(NonPositiveFrequency);
OPTOBEC_DEFINE_ERROR(NoRealRoot);
OPTOBEC_DEFINE_ERROR(SolverTolerance);
OPTOBEC_DEFINE_ERROR(EigenSolverFailure);
OPTOBEC_DEFINE_ERROR(UnstableDrift);
OPTOBEC_DEFINE_ERROR(SingularSystem);
OPTOBEC_DEFINE_ERROR(StepTooLarge);
OPTOBEC_DEFINE_ERROR(UnphysicalState);
OPTOBEC_DEFINE_ERROR(OddDimension);
OPTOBEC_DEFINE_ERROR(UnknownFigure);
OPTOBEC_DEFINE_ERROR(UnknownQuantity);
OPTOBEC_DEFINE_ERROR(UnknownParameter);
OPTOBEC_DEFINE_ERROR(ConfigParseError);
OPTOBEC_DEFINE_ERROR(IoFailure);

#undef OPTOBEC_DEFINE_ERROR

} // namespace optobec
