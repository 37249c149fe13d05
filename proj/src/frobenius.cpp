#include "khtrans/frobenius.hpp"

#include "khtrans/errors.hpp"

namespace khtrans::frobenius {

namespace {

std::uint64_t insert_bit(std::uint64_t mask, int position, bool value) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << position) - 1);
  const std::uint64_t high = (mask >> position) << (position + 1);
  return high | low | (std::uint64_t{value} << position);
}

std::uint64_t remove_bit(std::uint64_t mask, int position) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << position) - 1);
  return ((mask >> (position + 1)) << position) | low;
}

} // namespace

Tensor birth(const Tensor& t, int position) {
  if (position < 0 || position > 63)
    throw PreconditionError("birth position out of range");
  Tensor out;
  for (const auto& [labels, coeff] : t)
    out[insert_bit(labels, position, true)] += coeff;
  return out;
}

Tensor death(const Tensor& t, int factor) {
  if (factor < 0 || factor > 63)
    throw PreconditionError("death factor out of range");
  Tensor out;
  for (const auto& [labels, coeff] : t) {
    if ((labels >> factor) & 1u)
      continue;
    auto& slot = out[remove_bit(labels, factor)];
    slot += coeff;
    if (slot == 0)
      out.erase(remove_bit(labels, factor));
  }
  return out;
}

} // namespace khtrans::frobenius
