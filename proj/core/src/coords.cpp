#include "girthlab/coords.hpp"

#include <stdexcept>

namespace girthlab {

CoordLabel label_of_position(int pos) {
  if (pos < 1) throw std::invalid_argument("label_of_position: pos < 1");
  switch (pos) {
    case 1: return {1, 0, false};
    case 2: return {1, 1, false};
    case 3: return {1, 2, false};
    case 4: return {2, 1, false};
    default: break;
  }
  int i = (pos + 3) / 4; // block index, pos in 4i-3..4i
  switch (pos - (4 * i - 3)) {
    case 0: return {i, i, false};
    case 1: return {i, i, true};
    case 2: return {i, i + 1, false};
    case 3: return {i + 1, i, false};
  }
  throw std::logic_error("label_of_position");
}

int position_of_label(const CoordLabel& l) {
  if (l.i == 1 && l.j == 0 && !l.prime) return 1;
  if (l.prime) {
    if (l.i != l.j || l.i < 2) return 0;
    return pos_diag_prime(l.i);
  }
  if (l.i == l.j && l.i >= 1) return pos_diag(l.i);
  if (l.j == l.i + 1 && l.i >= 1) return pos_upper(l.i);
  if (l.i == l.j + 1 && l.j >= 1) return pos_lower(l.j);
  return 0;
}

std::string label_name(const CoordLabel& l) {
  if (l.i == 1 && l.j == 0) return "1";
  std::string s = std::to_string(l.i) + "," + std::to_string(l.j);
  if (l.prime) s += "'";
  return s;
}

} // namespace girthlab
