#pragma once

#include "semiprim/brute.hpp"

namespace oracle {
using namespace semiprim::brute;
}  // namespace oracle
