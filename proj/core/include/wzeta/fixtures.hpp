// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace wzeta::fixtures {

/// Certificate files compiled into the library, in certificate_io format.
std::string_view zeta3_fast_certificate();
std::string_view lminus8_fast_certificate();

}  // namespace wzeta::fixtures
