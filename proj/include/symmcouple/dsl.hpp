#pragma once

#include "symmcouple/orlicz.hpp"
#include "symmcouple/phi.hpp"
#include "symmcouple/spaces.hpp"
#include "symmcouple/weight.hpp"

#include <string>

namespace symmcouple {

/// Function-spec DSL, e.g. "power:alpha=0.5", "tlog",
/// "powerlog:alpha=0.5,q=1", "from-file:phi.csv". Unknown keys are rejected.
PhiFunction parse_phi(const std::string& spec);

/// "orlicz-power:p=2", "orlicz-powerlog1:p=3", "orlicz-sinlog:p=6,c=0.447",
/// "orlicz-from-phi:<phi spec>", "from-file:F.csv".
OrliczFunction parse_orlicz(const std::string& spec);

/// "recip" (optionally "recip:depth=30"), "dyadic-geom:q=2",
/// "from-schedule:tau=pow2,nmax=30", "from-file:w.csv".
Weight parse_weight(const std::string& spec);

/// "lorentz:p=2,phi=power:alpha=0.5", "lambda:phi=tlog",
/// "marcinkiewicz:phi=tlog", "orlicz:F=orlicz-power:p=2", "lp:p=1".
/// The phi=/F= key consumes the rest of the string (nested specs).
SpaceSpec parse_space(const std::string& spec);

/// "pow2", "const:v=1", "list:0.25;0.125;...", "wr:<weight spec>".
Schedule parse_schedule(const std::string& spec);

}  // namespace symmcouple
