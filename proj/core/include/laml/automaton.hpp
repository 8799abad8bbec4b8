#pragma once

#include <array>
#include <random>

// Two-action variable-structure stochastic learning automaton with the
// classical linear reinforcement schemes (Narendra & Thathachar). The
// environment is P-model: it answers each action with a binary
// reward/penalty signal. With r actions, chosen action i and rates a, b:
//
//   reward:   p_i <- p_i + a (1 - p_i)        p_j <- (1 - a) p_j
//   penalty:  p_i <- (1 - b) p_i              p_j <- b/(r-1) + (1 - b) p_j
//
// Here r = 2 always: the actions are ACTIVE and IDLE. The scheme taxonomy is
// the standard one: b = 0 is linear reward-inaction (L_R-I), a = b is linear
// reward-penalty (L_R-P), and 0 < b << a is linear reward-epsilon-penalty
// (L_R-epsP). Updates are pure functions of the state.

namespace laml {

enum class Action : int { Active = 0, Idle = 1 };

constexpr int index(Action a) { return static_cast<int>(a); }
constexpr Action other(Action a) { return a == Action::Active ? Action::Idle : Action::Active; }

// Binary P-model environment response.
enum class Reinforcement { Reward, Penalty };

enum class Scheme { RewardInaction, RewardPenalty, RewardEpsilonPenalty };

struct LearningParams {
  double reward_rate = 0.1;   // in (0, 1)
  double penalty_rate = 0.1;  // in [0, 1)
  Scheme scheme = Scheme::RewardPenalty;
};

LearningParams reward_inaction(double reward_rate);
LearningParams reward_penalty(double rate);
LearningParams reward_epsilon_penalty(double reward_rate, double penalty_rate);

// Throws std::invalid_argument when the rates are out of range or do not
// match the declared scheme (L_R-I: b = 0; L_R-P: a = b; L_R-epsP: 0 < b <= a/10).
void validate(const LearningParams& params);

struct AutomatonState {
  std::array<double, 2> p{0.5, 0.5};  // indexed by Action; sums to 1
  LearningParams params;
};

// Fresh automaton with the uniform action distribution.
AutomatonState make_automaton(const LearningParams& params);

inline double p_active(const AutomatonState& s) { return s.p[index(Action::Active)]; }

// Samples one action. Consumes exactly one uniform draw; the state is untouched.
Action select_action(const AutomatonState& state, std::mt19937_64& rng);

AutomatonState apply_reward(AutomatonState state, Action chosen);
AutomatonState apply_penalty(AutomatonState state, Action chosen);

AutomatonState update(AutomatonState state, Action chosen, Reinforcement signal);

// True when some action's probability has reached `threshold` (inclusive).
bool converged(const AutomatonState& state, double threshold);

}  // namespace laml
