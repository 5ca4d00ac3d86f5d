/**
 * \file version.hpp
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_VERSION_HPP
#define RAMATCH_VERSION_HPP

#include <string_view>

namespace ramatch {

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace ramatch

#endif  // RAMATCH_VERSION_HPP
