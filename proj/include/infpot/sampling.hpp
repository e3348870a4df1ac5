#pragma once

#include "infpot/types.hpp"

namespace infpot {

/// Van der Corput radical inverse; the workhorse behind the deterministic
/// quasi-random point sets used by the verification suites.
inline double halton(unsigned long index, unsigned base) {
    double f = 1.0, result = 0.0;
    while (index > 0) {
        f /= base;
        result += f * (index % base);
        index /= base;
    }
    return result;
}

/// Low-discrepancy points in the open unit square (bases 2 and 3).
struct Halton2 {
    unsigned long index = 0;
    PlanePoint next() {
        ++index;
        return {halton(index, 2), halton(index, 3)};
    }
};

}  // namespace infpot
