#ifndef HOMHOM_CAPS_HPP
#define HOMHOM_CAPS_HPP

namespace homhom {

// Size limits guarding the exponential searches. All overridable per call;
// the CLI additionally honours the HOMHOM_SIZE_CAP environment variable.
struct SizeCaps {
    int general = 24;     // witness search, homogeneity, cores, hom equivalence
    int canonical = 10;   // canonical forms and isomorphism checks
    int power_order = 4096; // number of vertices of a constructed direct power
    int census = 7;       // exhaustive enumeration level (hard ceiling 7)
};

inline SizeCaps default_caps() { return SizeCaps{}; }

} // namespace homhom

#endif
