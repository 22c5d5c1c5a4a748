#include "zc/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zc {

namespace {

void require_same_length(const Word& x, const Word& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("word length mismatch");
}

}  // namespace

Word Word::from_string(std::string_view bits) {
    Word w(static_cast<std::uint32_t>(bits.size()));
    for (std::uint32_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("word strings may contain only 0 and 1");
    }
    return w;
}

Word Word::from_support(std::uint32_t n, std::span<const std::uint32_t> ones) {
    Word w(n);
    for (auto i : ones) {
        if (i >= n) throw std::invalid_argument("support position out of range");
        w.set(i, true);
    }
    return w;
}

std::uint32_t Word::weight() const {
    std::uint32_t s = 0;
    for (auto b : blocks_) s += static_cast<std::uint32_t>(std::popcount(b));
    return s;
}

std::string Word::to_string() const {
    std::string s(n_, '0');
    for (std::uint32_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::uint32_t> Word::support() const {
    std::vector<std::uint32_t> s;
    s.reserve(weight());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::uint64_t v = blocks_[b];
        while (v) {
            s.push_back(static_cast<std::uint32_t>(b * 64 + std::countr_zero(v)));
            v &= v - 1;
        }
    }
    return s;
}

Word Word::operator&(const Word& o) const {
    require_same_length(*this, o);
    Word r(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) r.blocks_[b] = blocks_[b] & o.blocks_[b];
    return r;
}

Word Word::complement() const {
    Word r(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) r.blocks_[b] = ~blocks_[b];
    if (n_ & 63) r.blocks_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    return r;
}

bool Word::contains(const Word& o) const {
    require_same_length(*this, o);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if (o.blocks_[b] & ~blocks_[b]) return false;
    return true;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::uint64_t diff = blocks_[b] ^ o.blocks_[b];
        if (diff) {
            // lowest differing bit is the earliest differing position
            std::uint64_t m = diff & (~diff + 1);
            return (o.blocks_[b] & m) ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::uint32_t asym_delta(const Word& x, const Word& y) {
    require_same_length(x, y);
    std::uint32_t s = 0;
    for (std::size_t b = 0; b < x.blocks_.size(); ++b)
        s += static_cast<std::uint32_t>(std::popcount(x.blocks_[b] & ~y.blocks_[b]));
    return s;
}

std::uint32_t hamming_distance(const Word& x, const Word& y) {
    require_same_length(x, y);
    std::uint32_t s = 0;
    for (std::size_t b = 0; b < x.blocks_.size(); ++b)
        s += static_cast<std::uint32_t>(std::popcount(x.blocks_[b] ^ y.blocks_[b]));
    return s;
}

std::uint32_t z_distance(const Word& x, const Word& y) {
    return std::max(asym_delta(x, y), asym_delta(y, x));
}

ZBall::ZBall(Word center, std::uint32_t t) : center_(std::move(center)), t_(t) {
    if (t > center_.length()) throw std::invalid_argument("radius exceeds length");
    zeros_.reserve(center_.length() - center_.weight());
    for (std::uint32_t i = 0; i < center_.length(); ++i)
        if (!center_.get(i)) zeros_.push_back(i);
}

ZBall::iterator::iterator(const ZBall* ball) : ball_(ball), k_(0), current_(ball->center_) {}

void ZBall::iterator::materialize() {
    current_ = ball_->center_;
    for (auto idx : comb_) current_.set(ball_->zeros_[idx], true);
}

bool ZBall::iterator::advance_combination() {
    const std::uint32_t z = static_cast<std::uint32_t>(ball_->zeros_.size());
    for (std::uint32_t i = k_; i-- > 0;) {
        if (comb_[i] + (k_ - i) < z) {
            ++comb_[i];
            for (std::uint32_t j = i + 1; j < k_; ++j) comb_[j] = comb_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

ZBall::iterator& ZBall::iterator::operator++() {
    if (done_) return *this;
    if (k_ > 0 && advance_combination()) {
        materialize();
        return *this;
    }
    const std::uint32_t z = static_cast<std::uint32_t>(ball_->zeros_.size());
    ++k_;
    if (k_ > std::min(ball_->t_, z)) {
        done_ = true;
        return *this;
    }
    comb_.resize(k_);
    for (std::uint32_t j = 0; j < k_; ++j) comb_[j] = j;
    materialize();
    return *this;
}

BigInt ZBall::size() const {
    return z_ball_size(center_.length(), center_.weight(), t_);
}

bool z_ball_contains(const Word& center, std::uint32_t t, const Word& y) {
    require_same_length(center, y);
    return y.contains(center) && y.weight() - center.weight() <= t;
}

BigInt z_ball_size(std::uint32_t n, std::uint32_t center_weight, std::uint32_t t) {
    if (center_weight > n) throw std::invalid_argument("weight exceeds length");
    if (t > n) throw std::invalid_argument("radius exceeds length");
    const std::uint32_t zeros = n - center_weight;
    BigInt s = 0;
    for (std::uint32_t i = 0; i <= std::min(t, zeros); ++i) s += binomial(zeros, i);
    return s;
}

JointType joint_type(std::span<const Word> words) {
    if (words.empty()) throw std::invalid_argument("joint type of zero words");
    if (words.size() > 20) throw std::invalid_argument("joint type limited to 20 words");
    const std::uint32_t k = static_cast<std::uint32_t>(words.size());
    const std::uint32_t n = words[0].length();
    for (const auto& w : words) require_same_length(words[0], w);
    JointType jt;
    jt.n = n;
    jt.k = k;
    jt.counts.assign(std::size_t{1} << k, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::size_t idx = 0;
        for (std::uint32_t j = 0; j < k; ++j)
            idx |= static_cast<std::size_t>(words[j].get(i)) << (k - 1 - j);
        ++jt.counts[idx];
    }
    return jt;
}

Word random_word(std::uint32_t n, Rng& rng) {
    Word w(n);
    for (std::uint32_t i = 0; i < n; i += 64) {
        std::uint64_t bits = rng.next();
        for (std::uint32_t j = 0; j < 64 && i + j < n; ++j)
            if ((bits >> j) & 1) w.set(i + j, true);
    }
    return w;
}

Word random_word_of_weight(std::uint32_t n, std::uint32_t w, Rng& rng) {
    if (w > n) throw std::invalid_argument("weight exceeds length");
    std::vector<std::uint32_t> idx(n);
    for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
    // partial Fisher-Yates: the first w slots end up uniform without bias
    for (std::uint32_t i = 0; i < w; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    Word word(n);
    for (std::uint32_t i = 0; i < w; ++i) word.set(idx[i], true);
    return word;
}

}  // namespace zc
