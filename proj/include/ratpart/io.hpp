#pragma once

#include <string>
#include <string_view>

#include "ratpart/transducer.hpp"

namespace ratpart {

/// Reads the line-oriented text format:
///
///     alphabet <q>
///     state <name> [initial] [final]
///     arc <src> <dst> <x> <y>          # x, y: decimal symbol or "-" for the empty word
///
/// '#' starts a comment. States keep their declaration order; arcs may name
/// states declared further down. Throws ParseError, EmptyInitialSet, InvalidSymbol.
Transducer parse(std::string_view text);

/// Canonical text form: states in id order, arcs in (src, dst, x, y) order.
std::string serialize(const Transducer& t);

/// Graphviz rendering; finals are double circles, initials get an incoming arrow.
std::string to_dot(const Transducer& t);

std::string format_label(const Label& label, std::string_view epsilon = "-");

} // namespace ratpart
