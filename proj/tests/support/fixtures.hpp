#pragma once

#include <vector>

#include "qvp/instance.hpp"

namespace fixture {

using qvp::ExtValue;
using qvp::Rat;

// Three points a, b, c; d(b, a) = 0 is the only off-diagonal zero.
inline qvp::QSpace w3() {
    return qvp::QSpace::validate(std::vector<std::vector<Rat>>{{0, 1, 2}, {0, 0, 1}, {1, 2, 0}}, {"a", "b", "c"});
}

inline qvp::Instance w3_instance(std::vector<ExtValue> phi = {3, 1, 0}) {
    return qvp::Instance(w3(), qvp::Preorder::total(3), qvp::Phi::validate(std::move(phi)));
}

inline qvp::Instance singleton() {
    return qvp::Instance(qvp::QSpace::validate(std::vector<std::vector<Rat>>{{0}}, {"p"}), qvp::Preorder::total(1),
                         qvp::Phi::validate({Rat(5)}));
}

}  // namespace fixture
