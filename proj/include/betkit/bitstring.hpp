#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace betkit {

// A finite binary string. Comparison is lexicographic with 0 < 1 and a proper
// prefix ordered before its extensions, which is exactly std::string order on
// the '0'/'1' representation, so the representation is kept as text.
class BitString {
public:
    BitString() = default;

    // Parses a string of '0' and '1' characters; "" is the empty string.
    static BitString parse(const std::string& text);

    // The string of given length whose bits spell `offset` most significant
    // bit first. Lets dense tables address level slots directly.
    static BitString from_level_offset(std::size_t length, std::size_t offset);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // Bit at position i as 0 or 1; positions are 0-based from the left.
    int bit(std::size_t i) const { return bits_[i] - '0'; }

    void append(int bit) { bits_.push_back(bit ? '1' : '0'); }
    void pop_back() { bits_.pop_back(); }

    BitString child(int bit) const {
        BitString result = *this;
        result.append(bit);
        return result;
    }

    // First `length` bits.
    BitString prefix(std::size_t length) const;

    bool is_prefix_of(const BitString& other) const;

    // Offset of this string within its level: the numeric value of its bits,
    // most significant first. Requires size() <= 63.
    std::size_t level_offset() const;

    std::size_t count_zeros() const;
    std::size_t count_ones() const { return size() - count_zeros(); }

    const std::string& str() const { return bits_; }

    friend bool operator==(const BitString& a, const BitString& b) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::string bits_;
};

}  // namespace betkit
