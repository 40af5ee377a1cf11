#pragma once

#include "dzero/complex.hpp"
#include "dzero/error.hpp"
#include "dzero/gtheory.hpp"
#include "dzero/homology.hpp"
#include "dzero/kclass.hpp"
#include "dzero/linalg.hpp"
#include "dzero/module.hpp"
#include "dzero/polynomial.hpp"
#include "dzero/ring.hpp"
#include "dzero/zerolocus.hpp"

namespace dzero {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dzero
