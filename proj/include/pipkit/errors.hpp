#pragma once

#include <stdexcept>
#include <string>

namespace pipkit {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input points do not span the plane.
class DegenerateHull : public Error {
public:
    explicit DegenerateHull(const std::string& what) : Error("DegenerateHull: " + what) {}
};

// A consecutive pair of normals does not have a positive determinant.
class NotConvexOrder : public Error {
public:
    explicit NotConvexOrder(const std::string& what) : Error("NotConvexOrder: " + what) {}
};

class NotUnimodular : public Error {
public:
    explicit NotUnimodular(const std::string& what) : Error("NotUnimodular: " + what) {}
};

// The T_xyz triangle needs x | y and x | z.
class NotConstructible : public Error {
public:
    explicit NotConstructible(const std::string& what) : Error("NotConstructible: " + what) {}
};

// Parameters outside the documented range of a generator or search.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("OutOfRange: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

// Two independent computations disagreed. Always a bug in this library.
class InternalConsistency : public Error {
public:
    explicit InternalConsistency(const std::string& what)
        : Error("InternalConsistency: " + what) {}
};

// A brute-force search found a counterexample to a proven bound.
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& what) : Error("TheoremViolation: " + what) {}
};

}  // namespace pipkit
