#include "wexsim/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace wexsim {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

std::string format_int(std::int64_t value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_int: conversion failed");
  }
  return std::string(buf, ptr);
}

}  // namespace wexsim
