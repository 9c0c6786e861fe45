#pragma once

#include "howe/exactnum.hpp"
#include "howe/weylmodule.hpp"

namespace howe::test {

inline ModuleParams make_params(int n, std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
    return ModuleParams::make(n, scalar(p1, q1), scalar(p2, q2));
}

// a1 = 1/2, a2 = 1/3
inline ModuleParams generic_params(int n) { return make_params(n, 1, 2, 1, 3); }

// a1 = 3/2, a2 = 1/2
inline ModuleParams nongeneric_params(int n) { return make_params(n, 3, 2, 1, 2); }

inline BasisIndex idx(std::vector<std::int64_t> offsets) { return BasisIndex(std::move(offsets)); }

}  // namespace howe::test
