#pragma once

#include <gmpxx.h>

namespace neighsum {

// Arbitrary-precision integers and rationals. Everything on a confirmation
// path is exact; doubles appear only as discard-filters in bulk scans.
using Int = mpz_class;
using Rat = mpq_class;

}  // namespace neighsum
