#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ptm/machine.hpp"

namespace ptm {

/// Loads any machine file. Recognized content:
///   table lines      `state symbol -> action`
///   codebook lines   `codeword -> output`
///   one directive    `universal` | `diverge` | `print` | `index <n>` | `gate <term>`
/// `#` starts a comment. Mixing kinds is a ParseError.
std::shared_ptr<const Machine> parse_machine(std::string_view text);
std::shared_ptr<const Machine> load_machine_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace ptm
