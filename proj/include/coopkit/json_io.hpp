#pragma once

#include <json.hpp>

#include "coopkit/models.hpp"

namespace coopkit {

// {size, zero, plus: [[...]], imp: [[...]], one?, half?}
nlohmann::json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace coopkit
