#pragma once

// Lookup of the shipped algebra table files and the textual logic-spec
// syntax used by the command-line tools:
//
//   luk:n:i        <chain(n), F_{i/n}>
//   lukbar:n:i     <chain(n) x chain(1), F_{i/n} x {1}>
//   cpl            luk:1:1
//   alg:NAME[:d1,d2,...]   table file (shipped preset name or a path),
//                          optionally overriding the designated elements

#include <filesystem>
#include <string>

#include "lukamax/algebra.hpp"
#include "lukamax/matrix.hpp"

namespace lukamax {

// LUKAMAX_PRESET_DIR overrides the compiled-in default.
std::filesystem::path preset_dir();
std::filesystem::path corpus_dir();

// Loads presets/NAME.alg (or an explicit path when NAME contains a slash or
// ends in .alg).
LoadedAlgebra load_preset(const std::string& name);

MatrixLogic parse_logic_spec(const std::string& spec);

}  // namespace lukamax
