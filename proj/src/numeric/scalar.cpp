#include "kasym/numeric/scalar.hpp"

namespace kasym::numeric {

const DoubleDouble& ScalarTraits<DoubleDouble>::pi() {
    static const DoubleDouble v = parse_double_double("3.14159265358979323846264338327950288419716939937510");
    return v;
}

const DoubleDouble& ScalarTraits<DoubleDouble>::ln2() {
    static const DoubleDouble v = parse_double_double("0.69314718055994530941723212145817656807550013436026");
    return v;
}

const DoubleDouble& ScalarTraits<DoubleDouble>::euler_gamma() {
    static const DoubleDouble v = parse_double_double("0.57721566490153286060651209008240243104215933593992");
    return v;
}

}  // namespace kasym::numeric
