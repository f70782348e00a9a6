#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace singcount {

/// A_k singularities: node, cusp, tacnode.  A_k imposes k conditions.
enum class SingClass { A1 = 1, A2 = 2, A3 = 3 };

constexpr int codim(SingClass s) { return static_cast<int>(s); }

inline std::string to_string(SingClass s) { return "A" + std::to_string(codim(s)); }

inline std::optional<SingClass> parse_sing_class(std::string_view text) {
  if (text == "A1") return SingClass::A1;
  if (text == "A2") return SingClass::A2;
  if (text == "A3") return SingClass::A3;
  return std::nullopt;
}

}  // namespace singcount
