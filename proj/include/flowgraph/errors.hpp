#pragma once

#include <stdexcept>
#include <string>

namespace flowgraph {

// Base class for all failures raised by library operations. Validation
// findings are *not* errors (they are returned as reports); errors signal
// violated preconditions or unusable input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotWellFormed : public Error {
public:
    explicit NotWellFormed(const std::string& what) : Error(what) {}
};

class NotAdmissible : public Error {
public:
    explicit NotAdmissible(const std::string& what) : Error(what) {}
};

class NotIncident : public Error {
public:
    explicit NotIncident(const std::string& what) : Error(what) {}
};

class TEdgeHasNoIndex : public Error {
public:
    explicit TEdgeHasNoIndex(const std::string& what) : Error(what) {}
};

class InvalidCorner : public Error {
public:
    explicit InvalidCorner(const std::string& what) : Error(what) {}
};

class NoSuchEdge : public Error {
public:
    explicit NoSuchEdge(const std::string& what) : Error(what) {}
};

class NoSuchVertex : public Error {
public:
    explicit NoSuchVertex(const std::string& what) : Error(what) {}
};

class NotInImage : public Error {
public:
    explicit NotInImage(const std::string& what) : Error(what) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

class InconsistentPair : public Error {
public:
    explicit InconsistentPair(const std::string& what) : Error(what) {}
};

class GenerationBudgetExceeded : public Error {
public:
    explicit GenerationBudgetExceeded(const std::string& what) : Error(what) {}
};

// File / input syntax problem. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

} // namespace flowgraph
