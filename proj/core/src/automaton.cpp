#include "laml/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "laml/rng.hpp"

namespace laml {

namespace {

constexpr double kActionCount = 2.0;  // r in the penalty rule

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

LearningParams reward_inaction(double reward_rate) {
  LearningParams p{reward_rate, 0.0, Scheme::RewardInaction};
  validate(p);
  return p;
}

LearningParams reward_penalty(double rate) {
  LearningParams p{rate, rate, Scheme::RewardPenalty};
  validate(p);
  return p;
}

LearningParams reward_epsilon_penalty(double reward_rate, double penalty_rate) {
  LearningParams p{reward_rate, penalty_rate, Scheme::RewardEpsilonPenalty};
  validate(p);
  return p;
}

void validate(const LearningParams& params) {
  const double a = params.reward_rate;
  const double b = params.penalty_rate;
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("reward_rate must lie in (0, 1), got " + std::to_string(a));
  }
  if (!(b >= 0.0 && b < 1.0)) {
    throw std::invalid_argument("penalty_rate must lie in [0, 1), got " + std::to_string(b));
  }
  switch (params.scheme) {
    case Scheme::RewardInaction:
      if (b != 0.0) throw std::invalid_argument("L_R-I requires penalty_rate = 0");
      break;
    case Scheme::RewardPenalty:
      if (a != b) throw std::invalid_argument("L_R-P requires reward_rate = penalty_rate");
      break;
    case Scheme::RewardEpsilonPenalty:
      if (!(b > 0.0 && b <= a / 10.0)) {
        throw std::invalid_argument("L_R-epsP requires 0 < penalty_rate <= reward_rate/10");
      }
      break;
  }
}

AutomatonState make_automaton(const LearningParams& params) {
  AutomatonState s;
  s.p = {0.5, 0.5};
  s.params = params;
  return s;
}

Action select_action(const AutomatonState& state, std::mt19937_64& rng) {
  return uniform_unit(rng) < p_active(state) ? Action::Active : Action::Idle;
}

AutomatonState apply_reward(AutomatonState state, Action chosen) {
  const double a = state.params.reward_rate;
  const int i = index(chosen);
  const int j = index(other(chosen));
  state.p[i] = clamp_unit(state.p[i] + a * (1.0 - state.p[i]));
  state.p[j] = clamp_unit((1.0 - a) * state.p[j]);
  return state;
}

AutomatonState apply_penalty(AutomatonState state, Action chosen) {
  const double b = state.params.penalty_rate;
  const int i = index(chosen);
  const int j = index(other(chosen));
  state.p[i] = clamp_unit((1.0 - b) * state.p[i]);
  state.p[j] = clamp_unit(b / (kActionCount - 1.0) + (1.0 - b) * state.p[j]);
  return state;
}

AutomatonState update(AutomatonState state, Action chosen, Reinforcement signal) {
  return signal == Reinforcement::Reward ? apply_reward(std::move(state), chosen)
                                         : apply_penalty(std::move(state), chosen);
}

bool converged(const AutomatonState& state, double threshold) {
  return std::max(state.p[0], state.p[1]) >= threshold;
}

}  // namespace laml
