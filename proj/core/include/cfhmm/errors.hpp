#ifndef CFHMM_ERRORS_HPP
#define CFHMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfhmm {

/// Base class for all library errors. The `code()` string is stable and
/// machine-readable; the what() message carries details.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CFHMM_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

CFHMM_DEFINE_ERROR(HoleNotGridAligned);
CFHMM_DEFINE_ERROR(EmptyMesh);
CFHMM_DEFINE_ERROR(ResolutionIncompatible);
CFHMM_DEFINE_ERROR(NotSymmetric);
CFHMM_DEFINE_ERROR(SingularTensor);
CFHMM_DEFINE_ERROR(DomainError);
CFHMM_DEFINE_ERROR(DegenerateSegment);
CFHMM_DEFINE_ERROR(MissingMeanValue);
CFHMM_DEFINE_ERROR(SolverBreakdown);
CFHMM_DEFINE_ERROR(SingularSystem);
CFHMM_DEFINE_ERROR(NoExactSolution);
CFHMM_DEFINE_ERROR(NonDoublingLevels);
CFHMM_DEFINE_ERROR(IoError);
CFHMM_DEFINE_ERROR(ConfigError);

#undef CFHMM_DEFINE_ERROR

} // namespace cfhmm

#endif
