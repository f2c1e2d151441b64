#pragma once

#include <string_view>
#include <vector>

namespace sdim {

// Built-in regression corpus. Every group here has order <= 200 so the
// generic oracle can confirm each value.
inline const std::vector<std::string_view>& builtin_corpus() {
  static const std::vector<std::string_view> corpus = {
      // cyclic
      "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z10", "Z12", "Z15", "Z16", "Z21", "Z25", "Z27", "Z30", "Z36", "Z60",
      // dihedral
      "D6", "D8", "D10", "D12", "D16", "D18", "D20", "D24", "D30",
      // generalized quaternion
      "Q8", "Q12", "Q16", "Q20", "Q24", "Q32",
      // elementary abelian
      "E2^2", "E2^3", "E2^4", "E3^2", "E5^2", "E3^3",
      // abelian
      "Ab[2,4]", "Ab[2,8]", "Ab[4,4]", "Ab[3,9]", "Ab[2,6]", "Ab[2,12]", "Ab[2,2,6]", "Ab[3,6]", "Ab[6,6]",
      // symmetric and alternating
      "S3", "S4", "A4", "A5", "S5",
      // products
      "Z2xS3", "Z3xS3", "Z3xQ8", "Z2xD8", "Z2xQ8", "Z5xA4", "Z3xA4", "S3xS3", "Z2xZ4", "Z2xZ8", "Z4xZ4", "Z3xZ9",
  };
  return corpus;
}

}  // namespace sdim
