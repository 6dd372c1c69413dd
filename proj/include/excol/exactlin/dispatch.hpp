#pragma once

#include <cstdint>
#include <utility>

#include "excol/exactlin/field.hpp"

namespace excol::lin {

// Calls f with Rationals when p == 0, otherwise with GF(p).
template <class F>
decltype(auto) with_field(std::uint64_t p, F&& f) {
  if (p == 0) return std::forward<F>(f)(Rationals{});
  return std::forward<F>(f)(PrimeField{p});
}

}  // namespace excol::lin
