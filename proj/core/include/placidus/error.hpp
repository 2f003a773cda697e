#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace placidus
{

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Text that failed to parse. `position` is a 0-based offset into the input.
class parse_error : public error
{
    std::size_t _position;

public:
    parse_error( const std::string& message, std::size_t position )
        : error{ message + " at position " + std::to_string( position ) }, _position{ position } {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

class universe_mismatch : public error
{
public:
    universe_mismatch() : error{ "values are bound to different feature universes" } {}
};

class bound_exceeded : public error
{
public:
    using error::error;
};

// A reference (template id, predicate id, data artifact, node id) that does not resolve.
class dangling_reference : public error
{
public:
    using error::error;
};

// Instantiation refused: precondition failure or a failed lift obligation.
class instantiation_refused : public error
{
    std::vector< std::string > _witnesses;

public:
    instantiation_refused( const std::string& message, std::vector< std::string > witnesses = {} )
        : error{ message }, _witnesses{ std::move( witnesses ) } {}

    [[nodiscard]] const std::vector< std::string >& witnesses() const { return _witnesses; }
};

} // namespace placidus
