#ifndef FAIRDIV_VERSION_HPP
#define FAIRDIV_VERSION_HPP

namespace fairdiv {

inline constexpr const char* kArtifactName = "fairdiv";
inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace fairdiv

#endif
