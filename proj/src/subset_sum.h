// Copyright 2026 The coursealloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COURSEALLOC_SRC_SUBSET_SUM_H_
#define COURSEALLOC_SRC_SUBSET_SUM_H_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace coursealloc::internal {

// Reachable subset sums in [0, limit], kept as a packed bitset.
class SumSet {
 public:
  // Only the empty sum {0}. A negative limit gives the empty set.
  explicit SumSet(std::int64_t limit)
      : limit_(limit),
        words_(limit < 0 ? 0 : static_cast<std::size_t>(limit / 64 + 1), 0) {
    if (limit_ >= 0) words_[0] = 1;
  }

  std::int64_t limit() const { return limit_; }

  bool Contains(std::int64_t v) const {
    if (v < 0 || v > limit_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  // this |= this << w, truncated at limit.
  void AddItem(std::int64_t w) {
    if (w <= 0 || w > limit_) return;
    const std::size_t word_shift = static_cast<std::size_t>(w >> 6);
    const unsigned bit_shift = static_cast<unsigned>(w & 63);
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      std::uint64_t v = words_[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i - word_shift > 0) {
        v |= words_[i - word_shift - 1] >> (64 - bit_shift);
      }
      words_[i] |= v;
    }
    Trim();
  }

  // Shifts every member up by `base` (members beyond limit are lost).
  void Shift(std::int64_t base) {
    if (base <= 0) return;
    if (base > limit_) {
      std::fill(words_.begin(), words_.end(), 0);
      return;
    }
    const std::size_t word_shift = static_cast<std::size_t>(base >> 6);
    const unsigned bit_shift = static_cast<unsigned>(base & 63);
    for (std::size_t i = words_.size(); i-- > 0;) {
      std::uint64_t v = 0;
      if (i >= word_shift) {
        v = words_[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i - word_shift > 0) {
          v |= words_[i - word_shift - 1] >> (64 - bit_shift);
        }
      }
      words_[i] = v;
    }
    Trim();
  }

  // Prefix counts: count[v] = |{x in set : x <= v}| for v in [0, limit].
  std::vector<std::int64_t> PrefixCounts() const {
    std::vector<std::int64_t> out(limit_ < 0 ? 0 : limit_ + 1);
    std::int64_t run = 0;
    for (std::int64_t v = 0; v <= limit_; ++v) {
      run += Contains(v) ? 1 : 0;
      out[v] = run;
    }
    return out;
  }

 private:
  void Trim() {
    if (words_.empty()) return;
    const unsigned tail = static_cast<unsigned>((limit_ & 63) + 1);
    if (tail < 64) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::int64_t limit_;
  std::vector<std::uint64_t> words_;
};

}  // namespace coursealloc::internal

#endif  // COURSEALLOC_SRC_SUBSET_SUM_H_
