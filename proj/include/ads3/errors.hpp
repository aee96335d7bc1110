#pragma once

#include <stdexcept>
#include <string>

namespace ads3 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error { using Error::Error; };
class CorruptedElement : public Error { using Error::Error; };
class BudgetExceeded : public Error { using Error::Error; };
class IncompleteEnumeration : public Error { using Error::Error; };
class InvalidCertificateInput : public Error { using Error::Error; };
class InvalidClass : public Error { using Error::Error; };
class NoHyperbolicWords : public Error { using Error::Error; };
class DivergentNorm : public Error { using Error::Error; };
class DivergentTail : public Error { using Error::Error; };
class InvalidN : public Error { using Error::Error; };
class SignMismatch : public Error { using Error::Error; };
class InvalidEpsilon : public Error { using Error::Error; };
class NearCone : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace ads3
