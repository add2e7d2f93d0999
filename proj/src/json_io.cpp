#include "coopkit/json_io.hpp"

namespace coopkit {

nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json j;
  j["size"] = a.size;
  j["zero"] = a.zero;
  j["plus"] = a.plus;
  j["imp"] = a.imp_table;
  if (a.one) j["one"] = *a.one;
  if (a.half_table) j["half"] = *a.half_table;
  return j;
}

FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
  FiniteAlgebra a;
  a.size = j.at("size").get<int>();
  a.zero = j.at("zero").get<int>();
  a.plus = j.at("plus").get<std::vector<std::vector<int>>>();
  a.imp_table = j.at("imp").get<std::vector<std::vector<int>>>();
  if (j.contains("one")) a.one = j.at("one").get<int>();
  if (j.contains("half")) a.half_table = j.at("half").get<std::vector<int>>();
  if (a.size <= 0 || a.zero < 0 || a.zero >= a.size)
    throw std::invalid_argument("bad algebra: size/zero out of range");
  auto check_table = [&](const std::vector<std::vector<int>>& t, const char* name) {
    if (static_cast<int>(t.size()) != a.size)
      throw std::invalid_argument(std::string("bad algebra: ") + name + " row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != a.size)
        throw std::invalid_argument(std::string("bad algebra: ") + name + " column count");
      for (int v : row)
        if (v < 0 || v >= a.size)
          throw std::invalid_argument(std::string("bad algebra: ") + name + " entry range");
    }
  };
  check_table(a.plus, "plus");
  check_table(a.imp_table, "imp");
  if (a.one && (*a.one < 0 || *a.one >= a.size))
    throw std::invalid_argument("bad algebra: one out of range");
  if (a.half_table) {
    if (static_cast<int>(a.half_table->size()) != a.size)
      throw std::invalid_argument("bad algebra: half length");
    for (int v : *a.half_table)
      if (v < 0 || v >= a.size) throw std::invalid_argument("bad algebra: half entry range");
  }
  return a;
}

}  // namespace coopkit
