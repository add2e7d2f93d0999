#include "coopkit/laws.hpp"

#include <map>

namespace coopkit {

std::string to_string(Law law) {
  switch (law) {
    case Law::m1: return "m1";
    case Law::m2: return "m2";
    case Law::m3: return "m3";
    case Law::o1: return "o1";
    case Law::o2: return "o2";
    case Law::o3: return "o3";
    case Law::o4: return "o4";
    case Law::le: return "le";
    case Law::r: return "r";
    case Law::cwc: return "cwc";
    case Law::idem: return "idem";
    case Law::ann: return "ann";
    case Law::inv: return "inv";
    case Law::h: return "h";
    case Law::csd: return "csd";
  }
  return "?";
}

int law_arity(Law law) {
  switch (law) {
    case Law::m3:
    case Law::o1:
    case Law::le:
    case Law::idem:
    case Law::ann:
    case Law::inv:
    case Law::h:
      return 1;
    case Law::m2:
    case Law::o3:
    case Law::cwc:
    case Law::csd:
      return 2;
    default:
      return 3;
  }
}

bool law_needs_one(Law law) { return law == Law::ann || law == Law::inv; }
bool law_needs_half(Law law) { return law == Law::h; }

namespace {

std::vector<Law> pocrim_laws() {
  return {Law::m1, Law::m2, Law::m3, Law::o1, Law::o2, Law::o3, Law::o4, Law::le, Law::r};
}

std::vector<Law> with(std::vector<Law> base, std::initializer_list<Law> extra) {
  base.insert(base.end(), extra);
  return base;
}

}  // namespace

const std::vector<Law>& laws_for_class(AlgebraClass cls) {
  static const std::map<AlgebraClass, std::vector<Law>> table = {
      {AlgebraClass::Pocrim, pocrim_laws()},
      {AlgebraClass::BoundedPocrim, with(pocrim_laws(), {Law::ann})},
      {AlgebraClass::InvolutivePocrim, with(pocrim_laws(), {Law::ann, Law::inv})},
      {AlgebraClass::IdempotentPocrim, with(pocrim_laws(), {Law::idem, Law::cwc})},
      {AlgebraClass::BoundedIdempotentPocrim,
       with(pocrim_laws(), {Law::idem, Law::cwc, Law::ann})},
      {AlgebraClass::InvolutiveIdempotentPocrim,
       with(pocrim_laws(), {Law::idem, Law::cwc, Law::ann, Law::inv})},
      {AlgebraClass::Hoop, with(pocrim_laws(), {Law::cwc})},
      {AlgebraClass::BoundedHoop, with(pocrim_laws(), {Law::cwc, Law::ann})},
      {AlgebraClass::InvolutiveHoop, with(pocrim_laws(), {Law::cwc, Law::ann, Law::inv})},
      {AlgebraClass::WajsbergHoop, with(pocrim_laws(), {Law::cwc, Law::csd})},
      {AlgebraClass::Coop, with(pocrim_laws(), {Law::cwc, Law::h})},
      {AlgebraClass::BoundedCoop, with(pocrim_laws(), {Law::cwc, Law::h, Law::ann})},
      {AlgebraClass::InvolutiveCoop,
       with(pocrim_laws(), {Law::cwc, Law::h, Law::ann, Law::inv})},
  };
  return table.at(cls);
}

bool class_uses_dense_models(AlgebraClass cls) {
  switch (cls) {
    case AlgebraClass::Coop:
    case AlgebraClass::BoundedCoop:
    case AlgebraClass::InvolutiveCoop:
      return true;
    default:
      return false;
  }
}

AlgebraClass parse_class(const std::string& name) {
  static const std::map<std::string, AlgebraClass> table = {
      {"pocrim", AlgebraClass::Pocrim},
      {"bounded-pocrim", AlgebraClass::BoundedPocrim},
      {"involutive-pocrim", AlgebraClass::InvolutivePocrim},
      {"idempotent-pocrim", AlgebraClass::IdempotentPocrim},
      {"idempotent-hoop", AlgebraClass::IdempotentPocrim},
      {"bounded-idempotent-pocrim", AlgebraClass::BoundedIdempotentPocrim},
      {"involutive-idempotent-pocrim", AlgebraClass::InvolutiveIdempotentPocrim},
      {"hoop", AlgebraClass::Hoop},
      {"bounded-hoop", AlgebraClass::BoundedHoop},
      {"involutive-hoop", AlgebraClass::InvolutiveHoop},
      {"wajsberg-hoop", AlgebraClass::WajsbergHoop},
      {"coop", AlgebraClass::Coop},
      {"bounded-coop", AlgebraClass::BoundedCoop},
      {"involutive-coop", AlgebraClass::InvolutiveCoop},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown algebra class: " + name);
  return it->second;
}

std::string to_string(AlgebraClass cls) {
  switch (cls) {
    case AlgebraClass::Pocrim: return "pocrim";
    case AlgebraClass::BoundedPocrim: return "bounded-pocrim";
    case AlgebraClass::InvolutivePocrim: return "involutive-pocrim";
    case AlgebraClass::IdempotentPocrim: return "idempotent-pocrim";
    case AlgebraClass::BoundedIdempotentPocrim: return "bounded-idempotent-pocrim";
    case AlgebraClass::InvolutiveIdempotentPocrim: return "involutive-idempotent-pocrim";
    case AlgebraClass::Hoop: return "hoop";
    case AlgebraClass::BoundedHoop: return "bounded-hoop";
    case AlgebraClass::InvolutiveHoop: return "involutive-hoop";
    case AlgebraClass::WajsbergHoop: return "wajsberg-hoop";
    case AlgebraClass::Coop: return "coop";
    case AlgebraClass::BoundedCoop: return "bounded-coop";
    case AlgebraClass::InvolutiveCoop: return "involutive-coop";
  }
  return "?";
}

}  // namespace coopkit
