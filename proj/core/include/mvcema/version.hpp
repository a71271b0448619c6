#ifndef MVCEMA_VERSION_HPP
#define MVCEMA_VERSION_HPP

namespace mvcema {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mvcema

#endif  // MVCEMA_VERSION_HPP
