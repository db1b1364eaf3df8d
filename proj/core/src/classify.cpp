#include "dodo/classify.hpp"

#include <algorithm>

namespace dodo {

const char* to_string(ComplexityClass cls) {
  switch (cls) {
    case ComplexityClass::UdodospPoly: return "UDODOSP_POLY";
    case ComplexityClass::LdodospPoly: return "LDODOSP_POLY";
    case ComplexityClass::TrivialAllOff: return "TRIVIAL_ALL_OFF";
    case ComplexityClass::GeneralHard: return "GENERAL_HARD";
  }
  return "?";
}

ComplexityClass classify_instance(const Instance& instance) {
  const Bounds& b = instance.bounds;
  const int days = instance.days;
  if (b.min_work_run == 1 && b.min_off_run == 1) return ComplexityClass::UdodospPoly;
  if (b.max_work_total == days && b.max_off_total == days) return ComplexityClass::LdodospPoly;
  const bool nothing_required =
      std::all_of(instance.requests.begin(), instance.requests.end(), [](const RequestBound& r) { return r.lower == 0; });
  if (nothing_required && b.max_off_run == days && b.max_off_total == days) return ComplexityClass::TrivialAllOff;
  return ComplexityClass::GeneralHard;
}

}  // namespace dodo
