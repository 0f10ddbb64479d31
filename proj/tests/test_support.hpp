#pragma once

#include <complex>
#include <functional>

#include "doctest.h"
#include "tir/common.hpp"

namespace tir::test {

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

inline bool throws_fault(const std::function<void()>& f, Fault want) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.fault() == want;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace tir::test
