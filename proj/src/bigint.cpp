#include "wcc/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcc {

UBig::UBig(std::uint64_t v) {
    if (v) limbs_.push_back(std::uint32_t(v));
    if (v >> 32) limbs_.push_back(std::uint32_t(v >> 32));
}

UBig UBig::pow2(unsigned e) {
    UBig r;
    r.limbs_.assign(e / 32 + 1, 0);
    r.limbs_.back() = std::uint32_t(1) << (e % 32);
    return r;
}

void UBig::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

UBig& UBig::operator+=(const UBig& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = std::uint64_t(limbs_[i]) + carry +
                          (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = std::uint32_t(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(std::uint32_t(carry));
    return *this;
}

UBig& UBig::operator-=(const UBig& o) {
    if (*this < o) throw std::domain_error("UBig: negative result");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = std::int64_t(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? std::int64_t(o.limbs_[i]) : 0);
        if (d < 0) {
            d += std::int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = std::uint32_t(d);
    }
    trim();
    return *this;
}

UBig UBig::operator+(const UBig& o) const {
    UBig r = *this;
    r += o;
    return r;
}

UBig UBig::operator-(const UBig& o) const {
    UBig r = *this;
    r -= o;
    return r;
}

UBig UBig::operator*(const UBig& o) const {
    UBig r;
    if (limbs_.empty() || o.limbs_.empty()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = std::uint64_t(limbs_[i]) * o.limbs_[j] +
                                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = std::uint32_t(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + o.limbs_.size()] += std::uint32_t(carry);
    }
    r.trim();
    return r;
}

std::strong_ordering UBig::operator<=>(const UBig& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string UBig::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        std::vector<std::uint32_t> quot;
        for (std::uint32_t limb : work) {
            std::uint64_t cur = (rem << 32) | limb;
            std::uint32_t q = std::uint32_t(cur / 10);
            rem = cur % 10;
            if (!quot.empty() || q) quot.push_back(q);
        }
        digits.push_back(char('0' + rem));
        work = std::move(quot);
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace wcc
