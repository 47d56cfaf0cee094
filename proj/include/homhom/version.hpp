#ifndef HOMHOM_VERSION_HPP
#define HOMHOM_VERSION_HPP

namespace homhom {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
