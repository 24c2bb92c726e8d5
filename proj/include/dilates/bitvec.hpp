#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dilates {

// Fixed-width bit vector over Z/nZ supporting the cyclic shift-OR passes
// used by the sumset kernels.
class BitVec {
  public:
    BitVec() : n_(0) {}
    explicit BitVec(std::int64_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::int64_t size() const { return n_; }

    void set(std::int64_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::int64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::int64_t popcount() const {
        std::int64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // this |= (other rotated left by s positions, cyclically mod n).
    void or_rotated(const BitVec& other, std::int64_t s);

    std::vector<std::int64_t> to_elements() const;

    bool operator==(const BitVec&) const = default;

  private:
    std::int64_t n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace dilates
