#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

// The rank-two algebra U = <u+, u->. A label is `true` for u+ and `false`
// for u-. In the Lee deformation u-^2 = u+ instead of 0.
namespace khtrans::frobenius {

/// m(x (x) y). Empty when the product vanishes.
inline std::optional<bool> multiply(bool x, bool y, bool lee) {
  if (x && y)
    return true;
  if (x != y)
    return false;
  if (lee)
    return true;
  return std::nullopt;
}

/// Delta(x) as up to two terms (first, second), each with coefficient +1.
struct Coproduct {
  int count = 0;
  std::pair<bool, bool> terms[2];
};

inline Coproduct comultiply(bool x, bool lee) {
  if (x)
    return {2, {{true, false}, {false, true}}};
  if (lee)
    return {2, {{false, false}, {true, true}}};
  return {1, {{false, false}, {}}};
}

/// Element of U^(x)k: label mask -> coefficient, bit i set means u+ on factor i.
using Tensor = std::map<std::uint64_t, std::int64_t>;

/// The unit of the empty tensor power, i.e. the integer 1.
inline Tensor unit() { return Tensor{{0, 1}}; }

/// Birth of a circle: iota(1) = u+ inserted as factor `position`, shifting the
/// later factors up by one.
Tensor birth(const Tensor& t, int position);

/// Death of factor `factor`: epsilon(u-) = 1, epsilon(u+) = 0.
Tensor death(const Tensor& t, int factor);

} // namespace khtrans::frobenius
