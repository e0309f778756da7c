#pragma once

#include "ncop/partition.hpp"

#include <string>

namespace ncop {

// disk picture: one boundary arc per element, one filled region per block
std::string render_svg(const NCPartition& pi);

}  // namespace ncop
