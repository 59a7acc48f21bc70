#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hjarcs {

// Unsigned big integer, little-endian base-2^32 limbs. Covers what group
// order bookkeeping needs: multiply by a machine word, compare, print.
class BigUInt {
 public:
  BigUInt() : limbs_{0} {}
  BigUInt(uint64_t v) {
    limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
  }

  void mul(uint64_t f) {
    if (f == 0) {
      limbs_.assign(1, 0);
      return;
    }
    uint64_t flo = f & 0xffffffffu, fhi = f >> 32;
    std::vector<uint32_t> out(limbs_.size() + 2, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint64_t lo = uint64_t(limbs_[i]) * flo;
      add_at(out, i, lo);
      if (fhi) add_at(out, i + 1, uint64_t(limbs_[i]) * fhi);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    limbs_ = std::move(out);
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  bool operator==(const BigUInt& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUInt& o) const { return !(*this == o); }
  bool operator<(const BigUInt& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;)
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    return false;
  }

  bool equals(uint64_t v) const { return *this == BigUInt(v); }

  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t as_u64() const {
    uint64_t v = limbs_[0];
    if (limbs_.size() > 1) v |= uint64_t(limbs_[1]) << 32;
    return v;
  }

  std::string to_string() const {
    std::vector<uint32_t> work = limbs_;
    std::string digits;
    while (!(work.size() == 1 && work[0] == 0)) {
      uint64_t rem = 0;
      for (size_t i = work.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (work.size() > 1 && work.back() == 0) work.pop_back();
      for (int d = 0; d < 9; ++d) {
        digits.push_back(char('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (digits.empty()) digits.push_back('0');
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  static void add_at(std::vector<uint32_t>& v, size_t pos, uint64_t val) {
    while (val) {
      if (pos >= v.size()) v.push_back(0);
      uint64_t s = uint64_t(v[pos]) + (val & 0xffffffffu);
      v[pos] = static_cast<uint32_t>(s);
      val = (val >> 32) + (s >> 32);
      ++pos;
    }
  }

  std::vector<uint32_t> limbs_;
};

}  // namespace hjarcs
