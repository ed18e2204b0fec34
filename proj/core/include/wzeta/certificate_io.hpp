// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wzeta/wz.hpp"

namespace wzeta {

/// Line-oriented text form of a certificate:
///
///   # free comment
///   source fast_zeta3
///   num 0 0 77
///   den 1 4 -3/2
///   end
///
/// Each num/den line holds (degree in n, degree in k, exact rational).
/// Lines are emitted in exponent order, so write(parse(s)) == s for any
/// file this module produced.
std::string format_certificate(const Certificate& cert, std::string_view comment = {});
Certificate parse_certificate(std::string_view text);

Certificate read_certificate_file(const std::filesystem::path& path);
void write_certificate_file(const std::filesystem::path& path, const Certificate& cert,
                            std::string_view comment = {});

}  // namespace wzeta
