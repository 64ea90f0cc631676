#ifndef CMCONE_VERSION_HPP
#define CMCONE_VERSION_HPP

namespace cmcone {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cmcone

#endif
