#include <doctest.h>

#include <random>

#include "specden/cylinder.hpp"

using namespace specden;
using namespace specden::tds;

namespace {

// random cylinder over a 4-symbol alphabet with small window
Cylinder random_cylinder(std::mt19937& rng, int nsym = 4) {
  std::uniform_int_distribution<int> noff(0, 3), off(-2, 2), nstates(1, 15), bit(0, 1);
  Cylinder c = Cylinder::whole(nsym).with_states(StateSet{static_cast<std::uint8_t>(nstates(rng))});
  const int k = noff(rng);
  for (int i = 0; i < k && !c.is_empty(); ++i) {
    SymbolSet s(nsym);
    for (int sym = 0; sym < nsym; ++sym)
      if (bit(rng)) s.insert(sym);
    if (s.empty()) s.insert(0);
    c = c.constrained(off(rng), s);
  }
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("cylinder");

TEST_CASE("whole space has measure 1, empty has measure 0") {
  CHECK(Cylinder::whole(4).measure() == Rational(1));
  CHECK(Cylinder::empty(4).measure() == Rational(0));
  CHECK(Cylinder::empty(4).is_empty());
}

TEST_CASE("three pinned offsets and one state give 1/256 for two bits") {
  const int nsym = 4;
  Cylinder c = Cylinder::whole(nsym)
                   .constrained(-1, SymbolSet::single(nsym, 1))
                   .constrained(0, SymbolSet::single(nsym, 2))
                   .constrained(1, SymbolSet::single(nsym, 3))
                   .with_states(StateSet::single(StateSpace::kCarry));
  CHECK(c.measure() == Rational(1, 256));
}

TEST_CASE("intersection is idempotent and detects clashes") {
  std::mt19937 rng(7);
  const Cylinder c = random_cylinder(rng);
  CHECK(intersect(c, c) == c);

  const int nsym = 4;
  const Cylinder a = Cylinder::whole(nsym)
                         .constrained(0, SymbolSet::single(nsym, 3))
                         .with_states(StateSet::single(StateSpace::kCarry));
  const Cylinder b = Cylinder::whole(nsym)
                         .constrained(0, SymbolSet::single(nsym, Alphabet::kEmpty))
                         .with_states(StateSet::single(StateSpace::kCarry));
  CHECK(intersect(a, b).is_empty());
}

TEST_CASE("complement constraints intersect to the digit block") {
  // all-but-"-" meets all-but-"0": the remaining digits, measure (2^N-2)/2^N
  const int nsym = 4;  // N = 2
  const Alphabet alpha(2);
  const Cylinder a = Cylinder::whole(nsym).constrained(0, SymbolSet::all_but(nsym, Alphabet::kEmpty));
  const Cylinder b = Cylinder::whole(nsym).constrained(0, SymbolSet::all_but(nsym, alpha.digit(0)));
  const Cylinder both = intersect(a, b);
  CHECK(both.constraint(0).count() == 2);
  CHECK(both.constraint(0).contains(alpha.digit(1)));
  CHECK(both.constraint(0).contains(alpha.digit(2)));
  CHECK(both.measure() == Rational(2, 4));
}

TEST_CASE("partition cells tile the space exactly") {
  const int nsym = 4;
  CylinderUnion all;
  for (int x = 0; x < nsym; ++x)
    for (int y = 0; y < nsym; ++y)
      for (int z = 0; z < nsym; ++z)
        for (int s = 0; s < StateSpace::kCount; ++s)
          all.add(Cylinder::whole(nsym)
                      .constrained(-1, SymbolSet::single(nsym, x))
                      .constrained(0, SymbolSet::single(nsym, y))
                      .constrained(1, SymbolSet::single(nsym, z))
                      .with_states(StateSet::single(s)));
  CHECK(all.parts().size() == 256);
  CHECK(all.measure() == Rational(1));
}

TEST_CASE("inclusion-exclusion holds on random pairs") {
  std::mt19937 rng(21);
  for (int it = 0; it < 200; ++it) {
    const Cylinder a = random_cylinder(rng);
    const Cylinder b = random_cylinder(rng);
    CylinderUnion u;
    u.add(a);
    u.add(b);
    CHECK(u.measure() == a.measure() + b.measure() - intersect(a, b).measure());
  }
}

TEST_CASE("intersection is commutative and associative") {
  std::mt19937 rng(22);
  for (int it = 0; it < 200; ++it) {
    const Cylinder a = random_cylinder(rng), b = random_cylinder(rng), c = random_cylinder(rng);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
  }
}

TEST_CASE("difference decomposes into disjoint pieces that tile the complement") {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    const Cylinder a = random_cylinder(rng), b = random_cylinder(rng);
    const auto pieces = a.minus(b);
    Rational total(0);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      CHECK(intersect(pieces[i], b).is_empty());
      CHECK(pieces[i].subset_of(a));
      for (std::size_t k = i + 1; k < pieces.size(); ++k)
        CHECK(intersect(pieces[i], pieces[k]).is_empty());
      total += pieces[i].measure();
    }
    CHECK(total == a.measure() - intersect(a, b).measure());
  }
}

TEST_CASE("union containment") {
  const int nsym = 4;
  const Cylinder c = Cylinder::whole(nsym).constrained(0, SymbolSet::all_but(nsym, 0));
  CylinderUnion halves;
  halves.add(Cylinder::whole(nsym).constrained(0, SymbolSet::single(nsym, 1)));
  halves.add(Cylinder::whole(nsym).constrained(0, SymbolSet::single(nsym, 2)));
  CHECK_FALSE(halves.contains_cylinder(c));
  halves.add(Cylinder::whole(nsym).constrained(0, SymbolSet::single(nsym, 3)));
  CHECK(halves.contains_cylinder(c));
}

TEST_CASE("canonical json lists offsets ascending and names sorted") {
  const Alphabet alpha(2);
  const Cylinder c = Cylinder::whole(4)
                         .constrained(1, SymbolSet::all_but(4, 2))
                         .constrained(-1, SymbolSet::single(4, 0))
                         .with_states(StateSet::single(StateSpace::kZeroPrevDigits));
  const std::string j = c.canonical_json(alpha);
  CHECK(j.find("\"offset\":-1") != std::string::npos);
  CHECK(j.find("\"offset\":-1") < j.find("\"offset\":1"));
  CHECK(j.find("zero-prev-digits") != std::string::npos);
}

TEST_CASE("representative lies in its cylinder") {
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    const Cylinder c = random_cylinder(rng);
    if (c.is_empty()) continue;
    CHECK(c.contains(c.representative()));
  }
}

TEST_SUITE_END();
