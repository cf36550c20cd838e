#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace auctionlab {

// A bundle of items is a bitmask over item indices 0..k-1.
using Bundle = std::uint32_t;

constexpr int kMaxTableItems = 20;   // full 2^k tables
constexpr int kMaxVectorItems = 30;  // additive / unit-demand vectors

inline Bundle full_bundle(int k) {
  return k == 0 ? 0u : (k >= 32 ? ~0u : ((1u << k) - 1u));
}

inline int bundle_size(Bundle b) { return std::popcount(b); }

inline bool contains(Bundle b, int item) { return (b >> item) & 1u; }

// Lexicographic order on the sorted item-index sequences, with the empty
// bundle smallest. Used as the final tie-break in demand computations.
inline bool lex_less(Bundle a, Bundle b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline std::vector<int> bundle_items(Bundle b) {
  std::vector<int> items;
  while (b != 0) {
    items.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return items;
}

inline std::string bundle_to_string(Bundle b) {
  std::string s = "{";
  bool first = true;
  for (int item : bundle_items(b)) {
    if (!first) s += ",";
    s += std::to_string(item + 1);  // 1-based in human output
    first = false;
  }
  s += "}";
  return s;
}

}  // namespace auctionlab
