#pragma once

// Everything: elements and normal forms, homs, the divisibility poset,
// truncated inverse limits, profinite K_0 bookkeeping, gauge checks and the
// verification suites.

#include "cuntz/check.hpp"
#include "cuntz/coefficient.hpp"
#include "cuntz/element.hpp"
#include "cuntz/error.hpp"
#include "cuntz/gauge.hpp"
#include "cuntz/hom.hpp"
#include "cuntz/inverse_limit.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/poset.hpp"
#include "cuntz/profinite.hpp"
#include "cuntz/verify.hpp"
#include "cuntz/word.hpp"
