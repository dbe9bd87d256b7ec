#pragma once

#include <span>
#include <string_view>

namespace darboux {

struct Demo {
  std::string_view name;
  std::string_view summary;
  std::string_view document;  // scenario JSON
};

std::span<const Demo> demos();
const Demo* find_demo(std::string_view name);

}  // namespace darboux
