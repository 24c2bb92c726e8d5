#include "dilates/bitvec.hpp"

namespace dilates {

namespace {

// dst |= src << s, where src is an n-bit value stored in 64-bit words and
// the shift is a plain (non-cyclic) left shift. Bits at position >= n in
// dst are left for the caller to mask.
void or_shifted_left(std::vector<std::uint64_t>& dst,
                     const std::vector<std::uint64_t>& src, std::int64_t s) {
    const std::int64_t word_shift = s >> 6;
    const int bit_shift = static_cast<int>(s & 63);
    const std::int64_t nw = static_cast<std::int64_t>(dst.size());
    if (bit_shift == 0) {
        for (std::int64_t i = nw - 1; i >= word_shift; --i)
            dst[i] |= src[i - word_shift];
    } else {
        for (std::int64_t i = nw - 1; i >= word_shift; --i) {
            std::uint64_t w = src[i - word_shift] << bit_shift;
            if (i - word_shift - 1 >= 0)
                w |= src[i - word_shift - 1] >> (64 - bit_shift);
            dst[i] |= w;
        }
    }
}

// dst |= src >> s (plain right shift of an n-bit value).
void or_shifted_right(std::vector<std::uint64_t>& dst,
                      const std::vector<std::uint64_t>& src, std::int64_t s) {
    const std::int64_t word_shift = s >> 6;
    const int bit_shift = static_cast<int>(s & 63);
    const std::int64_t nw = static_cast<std::int64_t>(dst.size());
    for (std::int64_t i = 0; i + word_shift < nw; ++i) {
        std::uint64_t w = src[i + word_shift] >> bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < nw)
            w |= src[i + word_shift + 1] << (64 - bit_shift);
        dst[i] |= w;
    }
}

}  // namespace

void BitVec::or_rotated(const BitVec& other, std::int64_t s) {
    s %= n_;
    if (s < 0) s += n_;
    // rot(x, s) = (x << s | x >> (n - s)) masked to n bits
    or_shifted_left(words_, other.words_, s);
    if (s != 0) or_shifted_right(words_, other.words_, n_ - s);
    const int top = static_cast<int>(n_ & 63);
    if (top != 0) words_.back() &= (std::uint64_t{1} << top) - 1;
}

std::vector<std::int64_t> BitVec::to_elements() const {
    std::vector<std::int64_t> out;
    out.reserve(popcount());
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(words_.size()); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back((w << 6) + b);
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace dilates
