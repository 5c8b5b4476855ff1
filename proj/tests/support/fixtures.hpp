#pragma once

#include <string>

#include "fairhouse/instance_io.hpp"

#ifndef FAIRHOUSE_FIXTURE_DIR
#error "FAIRHOUSE_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace fixtures {

inline fairhouse::Instance load(const std::string& name) {
  return fairhouse::load_instance(std::string(FAIRHOUSE_FIXTURE_DIR) + "/" + name + ".yaml");
}

inline std::string path(const std::string& name) {
  return std::string(FAIRHOUSE_FIXTURE_DIR) + "/" + name + ".yaml";
}

}  // namespace fixtures
