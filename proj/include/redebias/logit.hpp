#pragma once

#include <cstddef>
#include <vector>

namespace redebias {

// Per-relation scores, aligned with a LabelSpace.
using LogitVector = std::vector<double>;

// Index of the largest element; ties break toward the lowest index.
std::size_t argmax(const LogitVector& v);

}  // namespace redebias
