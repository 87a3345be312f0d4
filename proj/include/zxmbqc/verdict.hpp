#pragma once

#include <string>

namespace zxmbqc {

enum class Verdict { Constant, Balanced };

inline std::string to_string(Verdict v) { return v == Verdict::Constant ? "constant" : "balanced"; }

}  // namespace zxmbqc
