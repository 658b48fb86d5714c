#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "addcomp/complement.hpp"
#include "addcomp/residue_cover.hpp"
#include "addcomp/sequence.hpp"

namespace addcomp {

// {"terms":["1","4",...],"growth_exponent":4,"growth_factor_rule":"linear"}
std::string sequence_to_json(const Sequence& seq);
Sequence sequence_from_json(std::string_view text);

// {"blocks":[{"k":1,"a_k":"1","U_k":["1"],"j_min":"3","j_max":"8"},...]}
std::string blocks_to_json(const ComplementBlocks& blocks);
ComplementBlocks blocks_from_json(std::string_view text);

// {"L":2,"translates":[1,3]}
std::string cover_to_json(const CoverSolution& solution);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace addcomp
