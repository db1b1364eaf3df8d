#pragma once

#include "dodo/instance.hpp"

namespace dodo {

/// Which decision procedure an instance admits.
enum class ComplexityClass {
  UdodospPoly,    // lw = lo = 1: only upper bounds bind
  LdodospPoly,    // Uw = Uo = D: only local bounds bind
  TrivialAllOff,  // rl = 0 everywhere and uo = Uo = D: nobody working is feasible
  GeneralHard,    // NP-complete in general
};

const char* to_string(ComplexityClass cls);

/// Checked in the order listed above; the first match wins.
ComplexityClass classify_instance(const Instance& instance);

}  // namespace dodo
