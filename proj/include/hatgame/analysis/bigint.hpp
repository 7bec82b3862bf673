#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hatgame {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace hatgame
