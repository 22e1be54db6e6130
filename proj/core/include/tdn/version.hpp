#ifndef TDN_VERSION_HPP
#define TDN_VERSION_HPP

namespace tdn {

inline const char* version() { return "tdn 0.1.0"; }

}  // namespace tdn

#endif
