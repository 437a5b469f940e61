#pragma once

#include <vector>

namespace mono {

using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

} // namespace mono
