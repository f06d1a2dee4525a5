#include "betkit/bitstring.hpp"

#include "betkit/errors.hpp"

namespace betkit {

BitString BitString::parse(const std::string& text) {
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseFailure("not a binary string: \"" + text + "\"");
        }
    }
    BitString result;
    result.bits_ = text;
    return result;
}

BitString BitString::from_level_offset(std::size_t length, std::size_t offset) {
    if (length > 63) {
        throw DepthExceeded("level offset addressing limited to 63 bits");
    }
    BitString result;
    result.bits_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        result.bits_[i] = ((offset >> (length - 1 - i)) & 1) ? '1' : '0';
    }
    return result;
}

BitString BitString::prefix(std::size_t length) const {
    BitString result;
    result.bits_ = bits_.substr(0, length);
    return result;
}

bool BitString::is_prefix_of(const BitString& other) const {
    return other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::size_t BitString::level_offset() const {
    if (size() > 63) {
        throw DepthExceeded("level offset addressing limited to 63 bits");
    }
    std::size_t value = 0;
    for (char c : bits_) {
        value = (value << 1) | static_cast<std::size_t>(c - '0');
    }
    return value;
}

std::size_t BitString::count_zeros() const {
    std::size_t count = 0;
    for (char c : bits_) {
        if (c == '0') ++count;
    }
    return count;
}

}  // namespace betkit
