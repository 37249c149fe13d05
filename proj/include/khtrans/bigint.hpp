#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace khtrans {

using BigInt = boost::multiprecision::cpp_int;

} // namespace khtrans
