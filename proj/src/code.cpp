#include "zc/code.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace zc {

Code::Code(std::uint32_t n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
    for (const auto& w : words_)
        if (w.length() != n_) throw std::invalid_argument("codeword length mismatch");
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw std::invalid_argument("duplicate codeword");
    if (!words_.empty()) {
        min_weight_ = UINT32_MAX;
        max_weight_ = 0;
        for (const auto& w : words_) {
            std::uint32_t wt = w.weight();
            min_weight_ = std::min(min_weight_, wt);
            max_weight_ = std::max(max_weight_, wt);
        }
    }
}

bool Code::contains_word(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::string code_to_json(const Code& code, const Meta& meta) {
    nlohmann::ordered_json j;
    j["n"] = code.length();
    auto& words = j["words"] = nlohmann::ordered_json::array();
    for (const auto& w : code) words.push_back(w.to_string());
    auto& m = j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return j.dump(2) + "\n";
}

void save_code(const Code& code, const Meta& meta, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << code_to_json(code, meta);
}

LoadedCode code_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("words"))
        throw std::invalid_argument("code file needs \"n\" and \"words\"");
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::vector<Word> words;
    for (const auto& s : j.at("words")) {
        Word w = Word::from_string(s.get<std::string>());
        if (w.length() != n) throw std::invalid_argument("codeword length mismatch");
        words.push_back(std::move(w));
    }
    LoadedCode lc;
    lc.code = Code(n, std::move(words));
    if (j.contains("meta"))
        for (const auto& [k, v] : j.at("meta").items())
            lc.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return lc;
}

LoadedCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return code_from_json(text);
}

Code random_code(std::uint32_t n, std::uint32_t size, Rng& rng) {
    std::vector<Word> words;
    words.reserve(size);
    std::uint64_t attempts = 0;
    while (words.size() < size) {
        Word w = random_word(n, rng);
        if (std::find(words.begin(), words.end(), w) == words.end())
            words.push_back(std::move(w));
        if (++attempts > 1000ull * size + 1000)
            throw std::runtime_error("random code: too many duplicate rejections");
    }
    return Code(n, std::move(words));
}

}  // namespace zc
