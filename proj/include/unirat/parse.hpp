#ifndef UNIRAT_PARSE_HPP
#define UNIRAT_PARSE_HPP

#include <string>

#include "unirat/ratfn.hpp"

namespace unirat {

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

/// Grammar: integers, declared identifiers, + - * / ^, parentheses; ^ binds
/// tightest and takes a non-negative integer literal exponent
/// (right-associative); unary minus allowed. Result is canonical.
RatFn parse_ratfn(const std::string& src, const Ring& ring);

}  // namespace unirat

#endif
