#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "curvemul/galois.hpp"
#include "curvemul/tools.hpp"

namespace testing {

using curvemul::Bits;

inline std::string instance_path(const std::string& name) {
  return std::string(CURVEMUL_DATA_DIR) + "/" + name + ".json";
}

// Carry-less product followed by long division; independent of the library's shift-and-add.
inline Bits slow_mul(unsigned k, unsigned mod, Bits a, Bits b) {
  unsigned prod = 0;
  for (unsigned i = 0; i < k; ++i)
    if ((b >> i) & 1) prod ^= static_cast<unsigned>(a) << i;
  for (int bit = 2 * static_cast<int>(k) - 2; bit >= static_cast<int>(k); --bit)
    if ((prod >> bit) & 1) prod ^= mod << (bit - k);
  return static_cast<Bits>(prod);
}

inline Bits slow_pow(unsigned k, unsigned mod, Bits a, unsigned e) {
  Bits r = 1;
  for (unsigned i = 0; i < e; ++i) r = slow_mul(k, mod, r, a);
  return r;
}

// Sum of a^i * b^j terms, a = w (bits 0b10) of the base field, written as {i, j} pairs.
// i < 0 stands for the coefficient 1.
inline std::vector<Bits> ab(unsigned k, unsigned mod, std::size_t n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<Bits> v(n, 0);
  for (auto [i, j] : terms) v.at(static_cast<std::size_t>(j)) ^= i < 0 ? Bits{1} : slow_pow(k, mod, 2, static_cast<unsigned>(i));
  return v;
}

}  // namespace testing
