#ifndef CMCONE_ERRORS_HPP
#define CMCONE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmcone {

/// Polynomial text could not be parsed. `position` is a 0-based column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("at column " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Input document does not match the schema. `path` is a JSON path like "$.branches[1].mult".
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A well-formed input violates a mathematical hypothesis (unit germ, shared component).
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The cone does not span its ambient space; facets are not defined.
class NotFullDimensional : public std::runtime_error {
public:
    NotFullDimensional(std::size_t span_dim, std::size_t ambient)
        : std::runtime_error("cone spans a " + std::to_string(span_dim) + "-dimensional subspace of Q^" +
                             std::to_string(ambient)),
          span_dim_(span_dim) {}
    std::size_t span_dimension() const noexcept { return span_dim_; }

private:
    std::size_t span_dim_;
};

}  // namespace cmcone

#endif
