// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_VERSION_HPP_
#define SUBPEL_VERSION_HPP_

namespace subpel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subpel

#endif  // SUBPEL_VERSION_HPP_
