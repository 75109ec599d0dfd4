#include "core/rng.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace metamcmc {

namespace {

constexpr uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(uint32_t a, uint32_t b, uint32_t* lo, uint32_t* hi) {
  const uint64_t product = static_cast<uint64_t>(a) * b;
  *lo = static_cast<uint32_t>(product);
  *hi = static_cast<uint32_t>(product >> 32);
}

inline void philox_round(uint32_t ctr[4], const uint32_t key[2]) {
  uint32_t lo0, hi0, lo1, hi1;
  mul_hi_lo(kPhiloxM4x32A, ctr[0], &lo0, &hi0);
  mul_hi_lo(kPhiloxM4x32B, ctr[2], &lo1, &hi1);
  const uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
  const uint32_t out1 = lo1;
  const uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
  const uint32_t out3 = lo0;
  ctr[0] = out0;
  ctr[1] = out1;
  ctr[2] = out2;
  ctr[3] = out3;
}

}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  key_[0] = static_cast<uint32_t>(seed);
  key_[1] = static_cast<uint32_t>(seed >> 32);
  id_[0] = static_cast<uint32_t>(stream_id);
  id_[1] = static_cast<uint32_t>(stream_id >> 32);
}

RandomStream RandomStream::for_task(uint64_t seed, uint32_t experiment, uint32_t task,
                                    uint32_t replica) {
  if (experiment > 0xFFu) throw ConfigError("RandomStream: experiment id exceeds 8 bits");
  if (task > 0xFFFFFFu) throw ConfigError("RandomStream: task id exceeds 24 bits");
  const uint64_t hi = (static_cast<uint64_t>(experiment) << 24) | task;
  return RandomStream(seed, (hi << 32) | replica);
}

void RandomStream::refill() {
  uint32_t ctr[4] = {static_cast<uint32_t>(counter_),
                     static_cast<uint32_t>(counter_ >> 32), id_[0], id_[1]};
  uint32_t key[2] = {key_[0], key_[1]};
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, key);
    key[0] += kPhiloxW32A;
    key[1] += kPhiloxW32B;
  }
  buf_[0] = ctr[0];
  buf_[1] = ctr[1];
  buf_[2] = ctr[2];
  buf_[3] = ctr[3];
  buf_pos_ = 0;
  ++counter_;
}

uint64_t RandomStream::next_u64() {
  if (buf_pos_ > 2) refill();
  const uint64_t lo = buf_[buf_pos_];
  const uint64_t hi = buf_[buf_pos_ + 1];
  buf_pos_ += 2;
  return lo | (hi << 32);
}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_pos() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (have_cached_gauss_) {
    have_cached_gauss_ = false;
    return cached_gauss_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
  const double theta = 6.283185307179586476925287 * uniform01();
  cached_gauss_ = r * std::sin(theta);
  have_cached_gauss_ = true;
  return r * std::cos(theta);
}

}  // namespace metamcmc
