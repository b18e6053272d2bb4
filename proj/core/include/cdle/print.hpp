#pragma once

#include <string>

#include "cdle/erase.hpp"
#include "cdle/syntax.hpp"

namespace cdle {

// Canonical UTF-8 concrete syntax. Binder names are freshened against
// everything in scope, so parsing the output yields an alpha-equivalent
// expression.
std::string print_term(const TermPtr& t);
std::string print_type(const TypePtr& t);
std::string print_kind(const KindPtr& k);
std::string print_pure(const PurePtr& p);

} // namespace cdle
