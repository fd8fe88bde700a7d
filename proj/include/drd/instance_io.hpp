#pragma once

#include <string>
#include <string_view>

#include "drd/restriction.hpp"

namespace drd {

/// Instance file format:
///
///   # comment lines start with '#'
///   p drd <n> <m>
///   f <k1> ... <kn>
///   e <u> <v>          (exactly m lines, 1-based endpoints)
///
/// Tokens are separated by single spaces and every line, including the last,
/// ends in '\n'. Throws ParseError (SyntaxError, CountMismatch, OutOfRange,
/// SelfLoop, DuplicateEdge, InadmissibleF) carrying the offending line.
Instance parse_instance(std::string_view text);

/// Canonical text: no comments, edges as u < v in lexicographic order.
std::string serialize_instance(const Instance& inst);

/// 64-bit FNV-1a of the canonical text, as 16 lowercase hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace drd
