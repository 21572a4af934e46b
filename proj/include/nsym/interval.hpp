#pragma once

namespace nsym {

// A real interval; whether the ends are open or closed is up to the holder.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Interval&) const = default;
  bool contains_closed(double x) const { return lo <= x && x <= hi; }
  bool contains_open(double x) const { return lo < x && x < hi; }
  double width() const { return hi - lo; }
};

}  // namespace nsym
