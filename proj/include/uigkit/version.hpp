#ifndef UIGKIT_VERSION_HPP
#define UIGKIT_VERSION_HPP

namespace uigkit {

inline constexpr const char* kToolName = "uigkit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace uigkit

#endif
