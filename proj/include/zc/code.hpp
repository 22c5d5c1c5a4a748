#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "zc/word.hpp"

namespace zc {

// An ordered set of distinct words of common length. Words are kept in
// lexicographic order, which is also the canonical order of the file format,
// so construct/save/load round-trips are byte identical.
class Code {
  public:
    Code() = default;
    Code(std::uint32_t n, std::vector<Word> words);

    std::uint32_t length() const { return n_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size()); }
    const Word& operator[](std::uint32_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    std::uint32_t min_weight() const { return min_weight_; }
    std::uint32_t max_weight() const { return max_weight_; }
    bool constant_weight() const { return min_weight_ == max_weight_; }

    bool contains_word(const Word& w) const;

  private:
    std::uint32_t n_ = 0;
    std::vector<Word> words_;
    std::uint32_t min_weight_ = 0;
    std::uint32_t max_weight_ = 0;
};

using Meta = std::map<std::string, std::string>;

// File format: {"n": <int>, "words": ["0101...", ...], "meta": {...}} with
// the words in lexicographic order and UTF-8 throughout.
void save_code(const Code& code, const Meta& meta, const std::filesystem::path& path);
std::string code_to_json(const Code& code, const Meta& meta);

struct LoadedCode {
    Code code;
    Meta meta;
};
LoadedCode load_code(const std::filesystem::path& path);
LoadedCode code_from_json(const std::string& text);

Code random_code(std::uint32_t n, std::uint32_t size, Rng& rng);

}  // namespace zc
