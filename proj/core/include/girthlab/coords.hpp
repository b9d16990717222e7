#pragma once
// Coordinate scheme for the D-series vertex spaces.  A vertex has k
// coordinates at 1-based positions 1..k; positions carry double-index
// labels:
//   pos 1          -> (first coordinate, label "1")
//   pos 2, 3, 4    -> (1,1), (1,2), (2,1)
//   pos 4i-3..4i   -> (i,i), (i,i)', (i,i+1), (i+1,i)   for i >= 2
// Positions are triangular: every defining relation with index r only
// reads positions <= r+1.

#include <cstdint>
#include <string>

namespace girthlab {

struct CoordLabel {
  int i = 0, j = 0;
  bool prime = false; // the (i,i)' coordinate
  bool operator==(const CoordLabel&) const = default;
};

// Label at a 1-based position (position 1 reports (1,0)).
CoordLabel label_of_position(int pos);

// 1-based position of a label, or 0 if it is not a coordinate (out of
// range or not of the scheme's shape).  k bounds are not checked here.
int position_of_label(const CoordLabel& l);

// Positions of the frequently used neighbours (valid for i >= 2):
// (i-1,i) and (i,i-1).
inline int pos_prev_upper(int i) { return i == 2 ? 3 : 4 * i - 5; } // (i-1,i)
inline int pos_prev_lower(int i) { return i == 2 ? 4 : 4 * i - 4; } // (i,i-1)

inline int pos_diag(int i) { return i == 1 ? 2 : 4 * i - 3; }       // (i,i)
inline int pos_diag_prime(int i) { return 4 * i - 2; }              // (i,i)', i >= 2
inline int pos_upper(int i) { return i == 1 ? 3 : 4 * i - 1; }      // (i,i+1)
inline int pos_lower(int i) { return i == 1 ? 4 : 4 * i; }          // (i+1,i)

std::string label_name(const CoordLabel& l); // "11", "22'", ...

} // namespace girthlab
