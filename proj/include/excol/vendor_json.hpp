#pragma once

// nlohmann/json is vendored as a single header in vendor/.
#include "json.hpp"
