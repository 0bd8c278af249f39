#pragma once

#include <string>

#include "stacky/fan.hpp"
#include "stacky/fan_json.hpp"

inline stacky::StackyFan load_fan(const std::string& name) {
    stacky::FanCandidate c = stacky::load_fan_file(std::string(TEST_DATA_DIR) + "/" + name + ".json");
    stacky::FanValidation v = stacky::validate_fan(c);
    if (!v.fan) throw std::runtime_error("test fan " + name + " failed validation");
    return *v.fan;
}
