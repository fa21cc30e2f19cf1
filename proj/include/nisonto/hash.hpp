// Copyright 2026 The nisonto Authors.
//
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

#ifndef NISONTO_HASH_HPP_
#define NISONTO_HASH_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace nisonto::hash {

// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

std::uint32_t fnv1a32(std::string_view data);

// The low `digits` hex digits of fnv1a32 (digits <= 8).
std::string short_hash(std::string_view data, int digits = 6);

}  // namespace nisonto::hash

#endif  // NISONTO_HASH_HPP_
