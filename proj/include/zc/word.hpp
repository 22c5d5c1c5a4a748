#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zc/exact.hpp"
#include "zc/rng.hpp"

namespace zc {

// Fixed-length binary word. Position 0 is the first character of the text
// form, and comparisons are lexicographic on that text form.
class Word {
  public:
    Word() = default;
    explicit Word(std::uint32_t n) : n_(n), blocks_((n + 63) / 64, 0) {}

    static Word from_string(std::string_view bits);
    static Word from_support(std::uint32_t n, std::span<const std::uint32_t> ones);

    std::uint32_t length() const { return n_; }
    std::uint32_t weight() const;

    bool get(std::uint32_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint32_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            blocks_[i >> 6] |= m;
        else
            blocks_[i >> 6] &= ~m;
    }

    std::string to_string() const;
    std::vector<std::uint32_t> support() const;

    Word operator&(const Word& o) const;
    Word complement() const;

    // True when supp(o) is contained in supp(*this).
    bool contains(const Word& o) const;

    bool operator==(const Word& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    std::strong_ordering operator<=>(const Word& o) const;

    std::span<const std::uint64_t> blocks() const { return blocks_; }

  private:
    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> blocks_;

    friend std::uint32_t asym_delta(const Word&, const Word&);
    friend std::uint32_t hamming_distance(const Word&, const Word&);
};

// Number of positions where x has a 1 and y a 0.
std::uint32_t asym_delta(const Word& x, const Word& y);

std::uint32_t hamming_distance(const Word& x, const Word& y);

// max(delta(x,y), delta(y,x)); equals (Hamming distance + |wt(x)-wt(y)|)/2.
std::uint32_t z_distance(const Word& x, const Word& y);

// Ball of the asymmetric channel, oriented for the decoding side: the center
// is a received word and the members are the words the channel could have
// sent. A member y satisfies supp(center) <= supp(y) and
// wt(y) - wt(center) <= t, i.e. it is the center with at most t zeros raised
// to ones. (The literature also uses the transmit-side orientation, where
// members are obtained by lowering ones; that is NOT what this range yields.)
class ZBall {
  public:
    ZBall(Word center, std::uint32_t t);

    class iterator {
      public:
        using value_type = Word;
        const Word& operator*() const { return current_; }
        iterator& operator++();
        bool operator!=(const iterator& o) const { return done_ != o.done_; }

      private:
        friend class ZBall;
        iterator() : done_(true) {}
        iterator(const ZBall* ball);
        void materialize();
        bool advance_combination();

        const ZBall* ball_ = nullptr;
        std::uint32_t k_ = 0;
        std::vector<std::uint32_t> comb_;
        Word current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(this); }
    iterator end() const { return iterator(); }

    BigInt size() const;

  private:
    Word center_;
    std::vector<std::uint32_t> zeros_;
    std::uint32_t t_;
};

bool z_ball_contains(const Word& center, std::uint32_t t, const Word& y);

BigInt z_ball_size(std::uint32_t n, std::uint32_t center_weight, std::uint32_t t);

// Empirical joint type of k words of common length n: counts[b] is the number
// of positions whose k-tuple of bits spells b, with word 0 contributing the
// most significant bit.
struct JointType {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint64_t> counts;

    double prob(std::size_t idx) const { return static_cast<double>(counts[idx]) / n; }
};

JointType joint_type(std::span<const Word> words);

Word random_word(std::uint32_t n, Rng& rng);
Word random_word_of_weight(std::uint32_t n, std::uint32_t w, Rng& rng);

}  // namespace zc
