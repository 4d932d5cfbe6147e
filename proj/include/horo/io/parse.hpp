#pragma once

#include <string_view>

#include "horo/io/json.hpp"

namespace horo::io {

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i", with optional exponents
/// ("1e-3+2.5e1i"). Whitespace is ignored.
Complex<double> parse_complex(std::string_view text);

/// Parses "re[+im i],re[+im i]". Throws ParseError on bad syntax and
/// for the zero spinor.
NonzeroSpinor<double> parse_spinor(std::string_view text);

}  // namespace horo::io
