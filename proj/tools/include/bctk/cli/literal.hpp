#pragma once

#include <string>
#include <string_view>

#include "bctk/bicomplex.hpp"

namespace bctk::cli {

/// Parses a bicomplex literal in either grammar:
///   Cartesian:  "a+bi+cj+dk" with optional terms, e.g. "1+2i-3j+0.5k", "-j"
///   Idempotent: "[re1+im1i, re2+im2i]e", e.g. "[1+0i, -1+0i]e"
/// Whitespace-insensitive. Throws ParseError with the offending offset.
Bicomplex parse_literal(std::string_view text);

/// Canonical literal (idempotent grammar); format_*(w) always reparses to w.
std::string format_idempotent(const Bicomplex& w);
std::string format_cartesian(const Bicomplex& w);

}  // namespace bctk::cli
