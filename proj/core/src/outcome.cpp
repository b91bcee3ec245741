#include "acd/outcome.hpp"

#include <sstream>

#include "acd/error.hpp"
#include "feedback_system.hpp"

namespace acd {

const char* to_string(Outcome::Kind kind) {
  switch (kind) {
    case Outcome::Kind::static_state: return "static";
    case Outcome::Kind::converges_to: return "converges-to";
    case Outcome::Kind::collapses_to_zero: return "collapses-to-zero";
    case Outcome::Kind::occupies_all: return "occupies-all";
  }
  return "unknown";
}

std::string Outcome::tag() const {
  if (kind != Kind::converges_to) return to_string(kind);
  std::ostringstream os;
  os.precision(12);
  os << "converges-to(" << limit << ")";
  return os.str();
}

Outcome phase_line_outcome(const FeedbackPolicy& defender,
                           const std::optional<FeedbackPolicy>& attacker,
                           const ModelParams& params, double i0) {
  params.validate();
  if (!(i0 >= 0.0 && i0 <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "initial state must lie in [0, 1]");
  }
  const detail::FeedbackSystem sys(defender, attacker ? &*attacker : nullptr, params);

  double i = i0;
  bool moved = false;
  // Each pass either stops or advances to a strictly farther critical state.
  const std::size_t max_passes = defender.critical_states().size() +
                                 (attacker ? attacker->critical_states().size() : 0) + 2;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    const detail::Motion m = sys.resolve(i);
    if (m.hold) {
      if (!moved) return {Outcome::Kind::static_state, i0};
      return {Outcome::Kind::converges_to, i};
    }
    if (!m.has_target) {
      return m.rate > 0.0 ? Outcome{Outcome::Kind::occupies_all, 1.0}
                          : Outcome{Outcome::Kind::collapses_to_zero, 0.0};
    }
    i = m.target;
    moved = true;
  }
  throw Error(ErrorKind::verification_failed, "phase-line analysis did not terminate");
}

}  // namespace acd
