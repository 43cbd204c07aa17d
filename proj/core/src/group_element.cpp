#include "specden/group_element.hpp"

#include <stdexcept>

namespace specden::tds {

GroupElement GroupElement::identity(int bits) { return GroupElement(bits, 0, gf2::Mat::identity(2)); }

GroupElement GroupElement::shift(int bits, int k) {
  GroupElement g = identity(bits);
  g.shift_ = k;
  return g;
}

GroupElement GroupElement::local_auto(int bits, int pos, const gf2::Mat& m) {
  if (m.dim() != bits) throw std::invalid_argument("GroupElement::local_auto: dimension mismatch");
  if (!m.invertible()) throw std::invalid_argument("GroupElement::local_auto: singular matrix");
  GroupElement g = identity(bits);
  if (!m.is_identity()) g.locals_.emplace(pos, m);
  return g;
}

GroupElement GroupElement::state_auto(int bits, const gf2::Mat& m) {
  if (m.dim() != 2) throw std::invalid_argument("GroupElement::state_auto: need 2x2");
  if (!m.invertible()) throw std::invalid_argument("GroupElement::state_auto: singular matrix");
  GroupElement g = identity(bits);
  g.state_ = m;
  return g;
}

void GroupElement::prune() {
  for (auto it = locals_.begin(); it != locals_.end();)
    it = it->second.is_identity() ? locals_.erase(it) : std::next(it);
}

bool GroupElement::is_identity() const {
  return shift_ == 0 && locals_.empty() && state_.is_identity();
}

// (g2 g1).x = g2.(g1.x): shift adds, state composes, and the tape part obeys
// phi_i = phi2_i o phi1_{i + k2}.
GroupElement compose(const GroupElement& second, const GroupElement& first) {
  if (second.bits_ != first.bits_) throw std::invalid_argument("compose: alphabet mismatch");
  GroupElement g(second.bits_, second.shift_ + first.shift_, second.state_ * first.state_);
  g.locals_ = second.locals_;
  for (const auto& [pos, m] : first.locals_) {
    const int at = pos - second.shift_;
    auto [it, fresh] = g.locals_.try_emplace(at, m);
    if (!fresh) it->second = it->second * m;
  }
  g.prune();
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g(bits_, -shift_, state_.inverse());
  // compose(*this, inv) stacks inv's auto at pos' - shift_, so pos' = pos + shift_
  for (const auto& [pos, m] : locals_) g.locals_.emplace(pos + shift_, m.inverse());
  g.prune();
  return g;
}

Configuration GroupElement::apply(const Configuration& x) const {
  Configuration y;
  y.state = StateSpace::state_of(state_.apply(StateSpace::vector_of(x.state)));
  for (const auto& [pos, sym] : x.tape) y.set(pos - shift_, sym);
  for (const auto& [pos, m] : locals_) y.set(pos, static_cast<int>(m.apply(static_cast<gf2::Vec>(y.symbol_at(pos)))));
  return y;
}

Cylinder GroupElement::apply(const Cylinder& c) const {
  if (c.is_empty()) return c;
  Cylinder out = Cylinder::whole(c.nsymbols()).with_states(c.states().mapped(state_));
  for (const auto& [off, allowed] : c.window()) {
    const int at = off - shift_;
    const auto it = locals_.find(at);
    out = out.constrained(at, it == locals_.end() ? allowed : allowed.mapped(it->second));
  }
  return out;
}

std::string GroupElement::pretty(const Alphabet& a) const {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += " ";
    out += s;
  };
  if (shift_ == 1) append("t");
  else if (shift_ == -1) append("t^-1");
  else if (shift_ != 0) append("t^" + std::to_string(shift_));
  for (const auto& [pos, m] : locals_) {
    std::string cycle = "(";
    bool first = true;
    for (int s = 1; s < a.size(); ++s) {
      const int img = static_cast<int>(m.apply(static_cast<gf2::Vec>(s)));
      if (img == s) continue;
      if (!first) cycle += ",";
      cycle += a.name(s) + "->" + a.name(img);
      first = false;
    }
    cycle += ")";
    append(cycle + "@" + std::to_string(pos));
  }
  if (!state_.is_identity()) {
    std::string cycle = "(";
    bool first = true;
    for (int s = 1; s < StateSpace::kCount; ++s) {
      const int img = static_cast<int>(state_.apply(static_cast<gf2::Vec>(s)));
      if (img == s) continue;
      if (!first) cycle += ",";
      cycle += StateSpace::name(s) + "->" + StateSpace::name(img);
      first = false;
    }
    append(cycle + ")");
  }
  return out.empty() ? "e" : out;
}

}  // namespace specden::tds
