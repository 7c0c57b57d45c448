#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace entringer {

// Entringer numbers outgrow 64 bits near n ~ 24, so the whole table is
// kept in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace entringer
