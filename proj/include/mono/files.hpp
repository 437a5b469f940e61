#pragma once

#include <string>
#include <variant>

#include "mono/charge.hpp"
#include "mono/gauge.hpp"
#include "mono/root_system.hpp"

namespace mono {

struct ParsedQuiver {
    QuiverTheory quiver;
    SimpleSeries flavor_series = SimpleSeries::A;
    int flavor_rank = 0;

    bool operator==(const ParsedQuiver&) const = default;
};

using ParsedInput = std::variant<Theory, ParsedQuiver, ChargeData>;

/// Line-oriented theory file: one directive per line, '#' comments, blank
/// lines ignored. Modes (mutually exclusive per file):
///   gauge GL <n> / weight <r ints> [x<m>]
///   quiver <SERIES> <rank> / edge <i> <j> / v <ints> / w <ints>
///   charges / row <d ints>
/// Throws ParseError with 1-based line/column positions.
ParsedInput parse_theory_file(const std::string& text);

/// Canonical rendering; re-parsing yields an identical structure.
std::string render_canonical(const ParsedInput& input);

} // namespace mono
