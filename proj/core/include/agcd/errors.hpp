#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agcd {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument to an operation (zero divisor, bad index, size mismatch).
class InvalidInputError : public Error {
  public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// A matrix turned out singular (or rank deficient) where a nonsingular one
/// was required.  Carries the rank information discovered so far.
class SingularMatrixError : public Error {
  public:
    SingularMatrixError(const std::string& what, std::size_t rank, std::size_t corank)
        : Error(what), rank(rank), corank(corank) {}

    std::size_t rank;
    std::size_t corank;
};

/// Two Cauchy nodes collided (|d1[i] - d2[j]| below the separation floor).
class NodeCollisionError : public Error {
  public:
    NodeCollisionError(const std::string& what, std::size_t row_node, std::size_t col_node)
        : Error(what), row_node(row_node), col_node(col_node) {}

    std::size_t row_node;
    std::size_t col_node;
};

/// Parse failure in the polynomial text format.  `line` is 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line) : Error(what), line(line) {}

    std::size_t line;
};

}  // namespace agcd
