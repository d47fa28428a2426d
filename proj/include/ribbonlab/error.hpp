#ifndef RIBBONLAB_ERROR_HPP
#define RIBBONLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbonlab
{

enum class errc {
    field_mismatch,
    division_by_zero,
    zero_element,
    support_violation,
    not_cocompact,
    window_too_small,
    invalid_argument,
    unsupported,
    malformed_input,
};

inline std::string_view to_string(errc c)
{
    switch (c) {
        case errc::field_mismatch:
            return "FieldMismatch";
        case errc::division_by_zero:
            return "DivisionByZero";
        case errc::zero_element:
            return "ZeroElement";
        case errc::support_violation:
            return "SupportViolation";
        case errc::not_cocompact:
            return "NotCocompact";
        case errc::window_too_small:
            return "WindowTooSmall";
        case errc::invalid_argument:
            return "InvalidArgument";
        case errc::unsupported:
            return "Unsupported";
        case errc::malformed_input:
            return "MalformedInput";
    }
    return "Unknown";
}

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto its exit-code contract.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept
    {
        return code_;
    }

private:
    errc code_;
};

} // namespace ribbonlab

#endif
