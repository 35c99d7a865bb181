// Copyright 2026 The oec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Structural hashing used for memoization keys.

#ifndef OEC_HASH_HPP_
#define OEC_HASH_HPP_

#include <cstdint>
#include <span>
#include <string_view>

namespace oec::detail {

inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t hash_combine(std::uint64_t seed,
                                            std::uint64_t value) {
  return mix64(seed ^ (mix64(value) + 0x632be59bd9b4e019ULL + (seed << 6) +
                       (seed >> 2)));
}

template <typename... Ts>
constexpr std::uint64_t hash_all(std::uint64_t seed, Ts... values) {
  ((seed = hash_combine(seed, static_cast<std::uint64_t>(values))), ...);
  return seed;
}

inline std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return mix64(h);
}

template <typename T>
std::uint64_t hash_span(std::uint64_t seed, std::span<const T> values) {
  seed = hash_combine(seed, values.size());
  for (const T& v : values) seed = hash_combine(seed, static_cast<std::uint64_t>(v));
  return seed;
}

}  // namespace oec::detail

#endif  // OEC_HASH_HPP_
