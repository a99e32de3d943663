#pragma once

#include <vector>

#include "gkc/groups/character.hpp"

namespace gkc {

void sort_rows(std::vector<Character>& rows);
/// Exact orthonormality and sum of squared degrees; throws Internal.
void verify_table(const GroupPtr& G, const std::vector<Character>& rows);

}  // namespace gkc
