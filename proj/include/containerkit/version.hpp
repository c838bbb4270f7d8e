#ifndef CONTAINERKIT_VERSION_HPP
#define CONTAINERKIT_VERSION_HPP

namespace containerkit {

inline constexpr const char* kVersion = "containerkit 0.1.0";

} // namespace containerkit

#endif
