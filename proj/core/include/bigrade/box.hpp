#pragma once

#include <cstddef>
#include <vector>

namespace bigrade {

/// Odometer over the integer box lo <= c <= hi (componentwise, inclusive).
/// Usage:
///   for (BoxWalk w(lo, hi); !w.done(); w.next()) use(w.point());
class BoxWalk {
public:
  BoxWalk(std::vector<int> lo, std::vector<int> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)), point_(lo_) {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (lo_[i] > hi_[i]) done_ = true;
  }

  bool done() const noexcept { return done_; }
  const std::vector<int>& point() const noexcept { return point_; }

  void next() {
    for (std::size_t i = point_.size(); i-- > 0;) {
      if (point_[i] < hi_[i]) {
        ++point_[i];
        return;
      }
      point_[i] = lo_[i];
    }
    done_ = true;
  }

private:
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> point_;
  bool done_ = false;
};

}  // namespace bigrade
