#pragma once

#include <string>

#include "nearcentral/numeric.hpp"
#include "nearcentral/partitions.hpp"

namespace test_helpers {

inline nearcentral::MarkedPartition mp(std::initializer_list<int> shape, int mark) {
    return {nearcentral::Partition(shape), mark};
}

inline nearcentral::Rational q(long num, long den = 1) {
    nearcentral::Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string str(const nearcentral::Rational& r) { return nearcentral::to_string(r); }

}  // namespace test_helpers
