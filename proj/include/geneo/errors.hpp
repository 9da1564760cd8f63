#pragma once

#include <stdexcept>

namespace geneo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct InconsistentHomomorphism : Error { using Error::Error; };
struct DomainTooLarge : Error { using Error::Error; };
struct NotStochastic : Error { using Error::Error; };
struct UnequalRowSums : Error { using Error::Error; };
struct NotEquivariant : Error { using Error::Error; };
struct NotTransitive : Error { using Error::Error; };
struct NotPermutant : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct InvarianceViolation : Error { using Error::Error; };
struct WrongSetting : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace geneo
