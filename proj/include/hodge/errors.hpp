#ifndef HODGE_ERRORS_HPP
#define HODGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hodge {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& msg = "degree mismatch") : Error(msg) {}
};

class ArityMismatch : public Error {
public:
    explicit ArityMismatch(const std::string& msg = "variable count mismatch") : Error(msg) {}
};

class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& msg = "no exact quotient") : Error(msg) {}
};

class RootMismatch : public Error {
public:
    explicit RootMismatch(const std::string& msg = "value is not a root of the form") : Error(msg) {}
};

class RootCollision : public Error {
public:
    explicit RootCollision(const std::string& msg = "parameter collides with a root") : Error(msg) {}
};

class NonRationalRoots : public Error {
public:
    explicit NonRationalRoots(const std::string& msg = "binary form does not split into distinct rational roots")
        : Error(msg) {}
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& msg = "singular linear system") : Error(msg) {}
};

// Raised when a cycle polynomial lies in the Jacobian ideal (the colon
// ideal would be the unit ideal).
class ZeroClass : public Error {
public:
    explicit ZeroClass(const std::string& msg = "polynomial has zero class in the Jacobian ring") : Error(msg) {}
};

class NotInIdeal : public Error {
public:
    explicit NotInIdeal(const std::string& msg = "polynomial is not in the Jacobian ideal") : Error(msg) {}
};

class NotInColonIdeal : public Error {
public:
    explicit NotInColonIdeal(const std::string& msg = "polynomial is not in the colon ideal") : Error(msg) {}
};

class SmoothnessFailure : public Error {
public:
    explicit SmoothnessFailure(const std::string& msg = "hypersurface is not smooth") : Error(msg) {}
};

class ParseError : public Error {
public:
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& msg = "unknown fixture id") : Error(msg) {}
};

} // namespace hodge

#endif
