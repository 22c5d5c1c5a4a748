#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zc/code.hpp"
#include "zc/exact.hpp"
#include "zc/rng.hpp"

namespace zc {

// Channel with one-sided errors: ones may flip to zero, zeros never flip.
// Drops each one of `sent` independently with probability tau (exact
// rational coin).
Word transmit_stochastic(const Word& sent, const BigRat& tau, Rng& rng);

// Indices of all codewords whose support contains y and whose weight exceeds
// y's by at most t: exactly the candidates an omniscient decoder must keep.
std::vector<std::size_t> list_decode(const Word& y, const Code& code, std::uint32_t t);

// An adversary sees the transmitted word, the whole code, and an erasure
// budget; it returns the channel output. Implementations that respect the
// channel keep supp(y) inside supp(sent); only StochasticDrops may exceed
// the budget.
class AdversaryStrategy {
  public:
    virtual ~AdversaryStrategy() = default;
    virtual std::string name() const = 0;
    virtual Word attack(const Word& sent, const Code& code, std::uint32_t budget,
                        Rng& rng) = 0;
};

// Moves the output toward the closest other codeword in the one-sided
// metric: zeroes positions of supp(sent) \ supp(target) in ascending order
// until the budget runs out.
class GreedyConfusion : public AdversaryStrategy {
  public:
    std::string name() const override { return "greedy-confusion"; }
    Word attack(const Word& sent, const Code& code, std::uint32_t budget,
                Rng& rng) override;
};

// Zeroes a uniformly random subset of min(budget, weight) ones.
class RandomErasures : public AdversaryStrategy {
  public:
    std::string name() const override { return "random-erasures"; }
    Word attack(const Word& sent, const Code& code, std::uint32_t budget,
                Rng& rng) override;
};

// Replays a fixed target word: outputs sent AND target, re-raising the
// highest erased positions first if that would exceed the budget. Used to
// replay a certificate's deep hole against each of its witnesses.
class CenterReplay : public AdversaryStrategy {
  public:
    explicit CenterReplay(Word target) : target_(std::move(target)) {}
    std::string name() const override { return "center-replay"; }
    Word attack(const Word& sent, const Code& code, std::uint32_t budget,
                Rng& rng) override;

  private:
    Word target_;
};

// Ignores the budget and drops each one independently with probability tau.
class StochasticDrops : public AdversaryStrategy {
  public:
    explicit StochasticDrops(BigRat tau) : tau_(std::move(tau)) {}
    std::string name() const override { return "stochastic"; }
    Word attack(const Word& sent, const Code& code, std::uint32_t budget,
                Rng& rng) override;

  private:
    BigRat tau_;
};

struct CampaignReport {
    std::uint32_t trials = 0;
    std::uint32_t budget = 0;        // decoder radius ceil(tau n)
    std::uint32_t list_cap = 0;      // L
    std::uint32_t max_list = 0;
    std::uint32_t violations = 0;    // trials with list size > L
    std::uint32_t sent_missing = 0;  // trials where sent fell outside the list
    std::uint32_t over_budget = 0;   // trials with more erasures than the budget
    double empirical_tau = 0.0;      // total erasures / total sent weight
};

// Runs `trials` transmissions of uniformly random codewords against the
// strategy, decoding each output at radius ceil(tau n). Each trial uses an
// independent stream derived from the seed, so reports are reproducible
// regardless of strategy internals.
CampaignReport campaign(const Code& code, AdversaryStrategy& adversary,
                        std::uint32_t list_cap, const BigRat& tau,
                        std::uint32_t trials, std::uint64_t seed);

}  // namespace zc
