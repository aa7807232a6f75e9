#pragma once

#include <cstdint>
#include <utility>

namespace utsforge {

// Cantor pairing on N x N: pair(x, y) = (x+y)(x+y+1)/2 + y.
std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);

// Inverse of cantor_pair; returns (x, y).
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

}  // namespace utsforge
