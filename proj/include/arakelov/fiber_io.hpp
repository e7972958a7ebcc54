#pragma once

#include <string>

#include "arakelov/fiber.hpp"

namespace arakelov {

// Fiber description file (JSON, UTF-8). Rationals travel as "num/den"
// strings; unknown keys are rejected.
SpecialFiber fiber_from_json_text(const std::string& text);
std::string fiber_to_json_text(const SpecialFiber& f);

SpecialFiber load_fiber(const std::string& path);
void save_fiber(const SpecialFiber& f, const std::string& path);

}  // namespace arakelov
