#include "zc/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace zc {

Word transmit_stochastic(const Word& sent, const BigRat& tau, Rng& rng) {
    if (tau < 0 || tau > 1) throw std::invalid_argument("tau must lie in [0, 1]");
    auto num = boost::multiprecision::numerator(tau).convert_to<std::uint64_t>();
    auto den = boost::multiprecision::denominator(tau).convert_to<std::uint64_t>();
    Word out = sent;
    for (std::uint32_t i : sent.support()) {
        if (rng.bernoulli(num, den)) out.set(i, false);
    }
    return out;
}

std::vector<std::size_t> list_decode(const Word& y, const Code& code, std::uint32_t t) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Word& x = code[i];
        if (x.contains(y) && x.weight() - y.weight() <= t) hits.push_back(i);
    }
    return hits;
}

Word GreedyConfusion::attack(const Word& sent, const Code& code, std::uint32_t budget,
                             Rng&) {
    const Word* target = nullptr;
    std::uint32_t best = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] == sent) continue;
        std::uint32_t d = z_distance(sent, code[i]);
        if (!target || d < best) {
            target = &code[i];
            best = d;
        }
    }
    Word out = sent;
    if (!target) return out;
    std::uint32_t spent = 0;
    for (std::uint32_t i : sent.support()) {
        if (spent == budget) break;
        if (!target->get(i)) {
            out.set(i, false);
            ++spent;
        }
    }
    return out;
}

Word RandomErasures::attack(const Word& sent, const Code&, std::uint32_t budget,
                            Rng& rng) {
    std::vector<std::uint32_t> ones = sent.support();
    rng.shuffle(ones);
    Word out = sent;
    std::uint32_t drops = std::min<std::uint32_t>(budget, std::uint32_t(ones.size()));
    for (std::uint32_t i = 0; i < drops; ++i) out.set(ones[i], false);
    return out;
}

Word CenterReplay::attack(const Word& sent, const Code&, std::uint32_t budget, Rng&) {
    Word out = sent & target_;
    std::vector<std::uint32_t> erased;
    for (std::uint32_t i : sent.support()) {
        if (!out.get(i)) erased.push_back(i);
    }
    while (erased.size() > budget) {
        out.set(erased.back(), true);
        erased.pop_back();
    }
    return out;
}

Word StochasticDrops::attack(const Word& sent, const Code&, std::uint32_t, Rng& rng) {
    return transmit_stochastic(sent, tau_, rng);
}

CampaignReport campaign(const Code& code, AdversaryStrategy& adversary,
                        std::uint32_t list_cap, const BigRat& tau,
                        std::uint32_t trials, std::uint64_t seed) {
    if (code.size() == 0) throw std::invalid_argument("code is empty");
    if (list_cap == 0) throw std::invalid_argument("list_cap must be positive");
    if (tau < 0 || tau > 1) throw std::invalid_argument("tau must lie in [0, 1]");

    CampaignReport rep;
    rep.trials = trials;
    rep.list_cap = list_cap;
    BigInt t_exact = ceil_rat(tau * code.length());
    rep.budget = static_cast<std::uint32_t>(t_exact);

    Rng root(seed);
    std::uint64_t erasures_total = 0, weight_total = 0;
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        Rng rng = root.derive(trial);
        std::size_t sent_idx = rng.below(code.size());
        const Word& sent = code[sent_idx];
        Word received = adversary.attack(sent, code, rep.budget, rng);
        if (!sent.contains(received)) {
            throw std::logic_error("strategy raised a zero: channel is one-sided");
        }
        std::uint32_t erased = sent.weight() - received.weight();
        erasures_total += erased;
        weight_total += sent.weight();
        if (erased > rep.budget) ++rep.over_budget;
        std::vector<std::size_t> list = list_decode(received, code, rep.budget);
        rep.max_list = std::max<std::uint32_t>(rep.max_list, std::uint32_t(list.size()));
        if (list.size() > list_cap) ++rep.violations;
        if (!std::binary_search(list.begin(), list.end(), sent_idx)) {
            ++rep.sent_missing;
        }
    }
    rep.empirical_tau = weight_total ? double(erasures_total) / double(weight_total) : 0.0;
    return rep;
}

}  // namespace zc
