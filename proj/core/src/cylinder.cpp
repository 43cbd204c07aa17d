#include "specden/cylinder.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <bit>
#include <stdexcept>

namespace specden::tds {

Cylinder Cylinder::whole(int nsymbols) {
  Cylinder c(nsymbols);
  c.states_ = StateSet::all();
  return c;
}

Cylinder Cylinder::empty(int nsymbols) {
  Cylinder c(nsymbols);
  c.states_ = StateSet{0};
  return c;
}

SymbolSet Cylinder::constraint(int offset) const {
  const auto it = window_.find(offset);
  return it == window_.end() ? SymbolSet::all(nsymbols_) : it->second;
}

void Cylinder::normalize() {
  if (states_.empty()) {
    window_.clear();
    return;
  }
  for (auto it = window_.begin(); it != window_.end();) {
    if (it->second.empty()) {  // empty constraint: whole cylinder is empty
      window_.clear();
      states_ = StateSet{0};
      return;
    }
    if (it->second.is_all())
      it = window_.erase(it);
    else
      ++it;
  }
}

Cylinder Cylinder::constrained(int offset, const SymbolSet& allowed) const {
  if (is_empty()) return *this;
  Cylinder c = *this;
  c.window_.insert_or_assign(offset, constraint(offset).intersect(allowed));
  c.normalize();
  return c;
}

Cylinder Cylinder::with_states(StateSet s) const {
  if (is_empty()) return *this;
  Cylinder c = *this;
  c.states_ = states_.intersect(s);
  c.normalize();
  return c;
}

bool Cylinder::contains(const Configuration& x) const {
  if (is_empty() || !states_.contains(x.state)) return false;
  for (const auto& [off, allowed] : window_)
    if (!allowed.contains(x.symbol_at(off))) return false;
  return true;
}

bool Cylinder::subset_of(const Cylinder& o) const {
  if (is_empty()) return true;
  if (o.is_empty()) return false;
  if (!states_.subset_of(o.states_)) return false;
  for (const auto& [off, allowed] : o.window_)
    if (!constraint(off).subset_of(allowed)) return false;
  return true;
}

Cylinder intersect(const Cylinder& a, const Cylinder& b) {
  if (a.nsymbols_ != b.nsymbols_) throw std::invalid_argument("Cylinder: alphabet mismatch");
  if (a.is_empty()) return a;
  if (b.is_empty()) return b;
  Cylinder c = a;
  c.states_ = a.states_.intersect(b.states_);
  for (const auto& [off, allowed] : b.window_) {
    auto [it, fresh] = c.window_.try_emplace(off, allowed);
    if (!fresh) it->second = it->second.intersect(allowed);
  }
  c.normalize();
  return c;
}

bool Cylinder::disjoint_from(const Cylinder& o) const { return intersect(*this, o).is_empty(); }

Rational Cylinder::measure() const {
  if (is_empty()) return Rational(0);
  Rational m(states_.count(), StateSpace::kCount);
  for (const auto& [off, allowed] : window_) m *= Rational(allowed.count(), nsymbols_);
  return m;
}

Configuration Cylinder::representative() const {
  if (is_empty()) throw std::domain_error("Cylinder::representative: empty cylinder");
  Configuration x;
  for (int s = 0; s < StateSpace::kCount; ++s)
    if (states_.contains(s)) {
      x.state = s;
      break;
    }
  for (const auto& [off, allowed] : window_) x.set(off, allowed.symbols().front());
  return x;
}

std::vector<Cylinder> Cylinder::minus(const Cylinder& o) const {
  if (is_empty()) return {};
  const Cylinder common = intersect(*this, o);
  if (common.is_empty()) return {*this};
  // orthogonal decomposition: peel one coordinate of o at a time
  std::vector<Cylinder> out;
  Cylinder rest = *this;
  for (const auto& [off, allowed] : o.window_) {
    const Cylinder piece = rest.constrained(off, constraint(off).minus(allowed));
    if (!piece.is_empty()) out.push_back(piece);
    rest = rest.constrained(off, allowed);
    if (rest.is_empty()) return out;
  }
  const Cylinder piece = rest.with_states(states_.minus(o.states_));
  if (!piece.is_empty()) out.push_back(piece);
  return out;
}

void CylinderUnion::add(Cylinder c) {
  if (!c.is_empty()) parts_.push_back(std::move(c));
}

bool CylinderUnion::contains(const Configuration& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Cylinder& c) { return c.contains(x); });
}

bool CylinderUnion::intersects(const Cylinder& c) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Cylinder& p) { return !p.disjoint_from(c); });
}

bool CylinderUnion::intersects(const CylinderUnion& o) const {
  return std::any_of(o.parts_.begin(), o.parts_.end(),
                     [&](const Cylinder& c) { return intersects(c); });
}

bool CylinderUnion::contains_cylinder(const Cylinder& c) const {
  std::vector<Cylinder> uncovered{c};
  for (const auto& p : parts_) {
    std::vector<Cylinder> next;
    for (const auto& u : uncovered)
      for (auto& frag : u.minus(p)) next.push_back(std::move(frag));
    uncovered.swap(next);
    if (uncovered.empty()) return true;
  }
  return uncovered.empty();
}

bool CylinderUnion::contains_union(const CylinderUnion& o) const {
  return std::all_of(o.parts_.begin(), o.parts_.end(),
                     [&](const Cylinder& c) { return contains_cylinder(c); });
}

std::vector<Cylinder> CylinderUnion::disjoint_parts() const {
  std::vector<Cylinder> out;
  for (const auto& c : parts_) {
    std::vector<Cylinder> fresh{c};
    for (const auto& prev : out) {
      std::vector<Cylinder> next;
      for (const auto& f : fresh)
        for (auto& frag : f.minus(prev)) next.push_back(std::move(frag));
      fresh.swap(next);
      if (fresh.empty()) break;
    }
    for (auto& f : fresh) out.push_back(std::move(f));
  }
  return out;
}

Rational CylinderUnion::measure() const {
  Rational m(0);
  for (const auto& c : disjoint_parts()) m += c.measure();
  return m;
}

CylinderUnion CylinderUnion::intersection(const CylinderUnion& a, const CylinderUnion& b) {
  CylinderUnion out;
  for (const auto& x : a.parts_)
    for (const auto& y : b.parts_) out.add(intersect(x, y));
  return out;
}

namespace {

std::string constraint_text(const SymbolSet& s, const Alphabet& a) {
  if (s.is_all()) return "*";
  const int n = s.universe();
  if (s.count() == 1) return a.name(s.symbols().front());
  if (s.count() == n - 1) {
    for (int i = 0; i < n; ++i)
      if (!s.contains(i)) return "!" + a.name(i);
  }
  std::string out = "{";
  bool first = true;
  for (int i : s.symbols()) {
    if (!first) out += ",";
    out += a.name(i);
    first = false;
  }
  return out + "}";
}

std::string states_text(StateSet s) {
  if (s.is_all()) return "*";
  std::string out;
  for (int i = 0; i < StateSpace::kCount; ++i)
    if (s.contains(i)) {
      if (!out.empty()) out += "|";
      out += StateSpace::name(i);
    }
  return out;
}

}  // namespace

std::string Cylinder::pretty(const Alphabet& a) const {
  if (is_empty()) return "[empty]";
  int lo = 0, hi = 0;
  if (!window_.empty()) {
    lo = std::min(window_.begin()->first, 0);
    hi = std::max(window_.rbegin()->first, 0);
  }
  std::string out = "[";
  for (int p = lo; p <= hi; ++p) {
    if (p > lo) out += " ";
    const std::string cell = constraint_text(constraint(p), a);
    out += p == 0 ? "(" + cell + ")" : cell;
  }
  out += ", " + states_text(states_) + "]";
  return out;
}

std::string CylinderUnion::pretty(const Alphabet& a) const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const auto& c : parts_) {
    if (!out.empty()) out += " u ";
    out += c.pretty(a);
  }
  return out;
}

std::string Cylinder::canonical_json(const Alphabet& a) const {
  nlohmann::json j;
  j["empty"] = is_empty();
  j["window"] = nlohmann::json::array();
  for (const auto& [off, allowed] : window_) {  // std::map: offsets ascending
    std::vector<std::string> names;
    for (int s : allowed.symbols()) names.push_back(a.name(s));
    std::sort(names.begin(), names.end());
    j["window"].push_back({{"offset", off}, {"symbols", names}});
  }
  std::vector<std::string> st;
  for (int s = 0; s < StateSpace::kCount; ++s)
    if (states_.contains(s)) st.push_back(StateSpace::name(s));
  std::sort(st.begin(), st.end());
  j["states"] = st;
  return j.dump();
}

std::string Configuration::pretty(const Alphabet& a) const {
  int lo = 0, hi = 0;
  if (!tape.empty()) {
    lo = std::min(tape.begin()->first, 0);
    hi = std::max(tape.rbegin()->first, 0);
  }
  std::string out = "(";
  for (int p = lo - 1; p <= hi + 1; ++p) {
    if (p > lo - 1) out += " ";
    const std::string cell = a.name(symbol_at(p));
    out += p == 0 ? "[" + cell + "]" : cell;
  }
  return out + ", " + StateSpace::name(state) + ")";
}

std::string Configuration::canonical_json(const Alphabet& a) const {
  nlohmann::json j;
  j["tape"] = nlohmann::json::array();
  for (const auto& [pos, sym] : tape) j["tape"].push_back({{"offset", pos}, {"symbol", a.name(sym)}});
  j["state"] = StateSpace::name(state);
  return j.dump();
}

}  // namespace specden::tds
