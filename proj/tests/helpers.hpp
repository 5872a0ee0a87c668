#pragma once

#include <initializer_list>
#include <string>

#include "gdta/algebra.hpp"

namespace gdta::test {

inline GDParams P(const std::string& factors, std::uint64_t p) {
  return GDParams(parse_factors(factors), p);
}

inline Color col(std::initializer_list<int> entries) {
  Color c;
  std::size_t i = 0;
  for (int e : entries) {
    if (e == 1) c.ones |= 1ull << i;
    if (e == 2) c.twos |= 1ull << i;
    ++i;
  }
  return c;
}

inline std::uint64_t idx(std::initializer_list<int> coords_1based) {
  std::uint64_t m = 0;
  for (int c : coords_1based) m |= 1ull << (c - 1);
  return m;
}

inline TripleSet ts(std::initializer_list<int> s1, std::initializer_list<int> s2,
                    std::initializer_list<int> s3) {
  return TripleSet{idx(s1), idx(s2), idx(s3)};
}

}  // namespace gdta::test
