#pragma once

#include <cstdint>

namespace metamcmc {

/// Counter-based stream built on Philox4x32-10. A stream is identified by
/// (seed, stream id); draws within a stream advance a 64-bit counter, so any
/// (experiment, task, replica) triple maps to its own independent stream and
/// replaying a stream reproduces the exact same sequence. No global state.
class RandomStream {
 public:
  RandomStream(uint64_t seed, uint64_t stream_id);

  /// Stream for a work item. task must fit in 24 bits, experiment in 8.
  static RandomStream for_task(uint64_t seed, uint32_t experiment, uint32_t task,
                               uint32_t replica);

  uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_pos();

  /// Standard normal deviate (Box-Muller, second value cached).
  double gaussian();

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }

 private:
  void refill();

  uint64_t seed_;
  uint64_t stream_id_;
  uint64_t counter_ = 0;
  uint32_t key_[2];
  uint32_t id_[2];
  uint32_t buf_[4];
  int buf_pos_ = 4;
  double cached_gauss_ = 0.0;
  bool have_cached_gauss_ = false;
};

}  // namespace metamcmc
