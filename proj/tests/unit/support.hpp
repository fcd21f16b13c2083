#pragma once

#include <doctest.h>

#include <optional>

#include "weilform/errors.hpp"

// Error code thrown by fn, or nullopt when it returns normally.
template <class F>
std::optional<weilform::Errc> errc_of(F&& fn) {
  try {
    fn();
  } catch (const weilform::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
