#include "doctest.h"

#include <set>

#include "radchar/error.hpp"
#include "radchar/gf.hpp"

using namespace radchar;

TEST_CASE("field_create: prime and quadratic fields") {
  auto f3 = Field::create(3, 1);
  CHECK(f3->order() == 3);
  CHECK(!f3->is_extension());

  auto f9 = Field::create(3, 2);
  CHECK(f9->order() == 9);
  // 2 is the least nonresidue mod 3: 0^2, 1^2, 2^2 = 0, 1, 1.
  CHECK(f9->defining_constant() == Elem{2});
  const Elem t = f9->generator();
  CHECK(f9->mul(t, t) == f9->from_int(-1));
}

TEST_CASE("field_create: rejects bad characteristic and degree") {
  CHECK_THROWS_WITH_AS(Field::create(2, 1), "odd prime required", ParamError);
  CHECK_THROWS_WITH_AS(Field::create(9, 1), "odd prime required", ParamError);
  CHECK_THROWS_WITH_AS(Field::create(15, 1), "odd prime required", ParamError);
  CHECK_THROWS_WITH_AS(Field::create(3, 3), "unsupported extension degree", ParamError);
  CHECK_THROWS_WITH_AS(Field::for_order(2), "odd prime power required", ParamError);
  CHECK_THROWS_WITH_AS(Field::for_order(12), "odd prime power required", ParamError);
  CHECK(Field::for_order(25)->order() == 25);
}

TEST_CASE("arith: small cases") {
  auto f3 = Field::create(3);
  CHECK(f3->mul(Elem{2}, Elem{2}) == Elem{1});
  CHECK(f3->div(Elem{1}, Elem{2}) == Elem{2});
  CHECK_THROWS_WITH_AS(f3->div(Elem{1}, Elem{0}), "zero divisor", ArithmeticError);

  auto f9 = Field::create(3, 2);
  CHECK(f9->mul(f9->generator(), f9->generator()) == Elem{2});
}

TEST_CASE("frobenius and relative trace on F_9") {
  auto f9 = Field::create(3, 2);
  const Elem t = f9->generator();
  CHECK(f9->frobenius(Elem{1}) == Elem{1});
  CHECK(f9->frobenius(t) == f9->mul(Elem{2}, t));
  const Elem one_t = f9->add(Elem{1}, t);
  CHECK(f9->frobenius(f9->frobenius(one_t)) == one_t);
  CHECK(f9->frobenius(t) == f9->pow(t, 3));

  CHECK(f9->relative_trace(Elem{1}) == Elem{2});
  CHECK(f9->relative_trace(t) == Elem{0});
  CHECK(f9->relative_trace(one_t) == Elem{2});

  CHECK_THROWS_WITH_AS(Field::create(3)->frobenius(Elem{1}), "no conjugation defined", ParamError);
}

namespace {

std::vector<FieldPtr> small_fields() {
  return {Field::create(3), Field::create(5), Field::create(7), Field::create(3, 2)};
}

std::vector<FieldPtr> small_extensions() {
  return {Field::create(3)->extend(), Field::create(5)->extend(), Field::create(7)->extend(),
          Field::create(3, 2)->extend()};
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  auto fields = small_fields();
  fields.push_back(Field::create(3)->extend());
  for (const auto& F : fields) {
    CAPTURE(F->order());
    const auto els = F->elements();
    for (Elem a : els) {
      CHECK(F->add(a, F->neg(a)) == Elem{0});
      if (a.code != 0) CHECK(F->mul(a, F->inv(a)) == Elem{1});
      for (Elem b : els) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (Elem c : els) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is an involution fixing exactly the base field") {
  for (const auto& E : small_extensions()) {
    const std::uint32_t q = E->base()->order();
    CAPTURE(q);
    std::size_t fixed = 0;
    for (Elem a : E->elements()) {
      CHECK(E->frobenius(E->frobenius(a)) == a);
      CHECK(E->frobenius(a) == E->pow(a, q));
      if (E->frobenius(a) == a) {
        ++fixed;
        CHECK(E->in_base(a));
      }
    }
    CHECK(fixed == q);
  }
}

TEST_CASE("trace-zero line has q elements; norm is onto F_q^*") {
  for (const auto& E : small_extensions()) {
    const std::uint32_t q = E->base()->order();
    CAPTURE(q);
    std::size_t trace_zero = 0;
    std::set<std::uint32_t> norms;
    for (Elem a : E->elements()) {
      if (E->relative_trace(a) == Elem{0}) ++trace_zero;
      if (a.code != 0) {
        const Elem nrm = E->pow(a, q + 1);
        CHECK(nrm == E->relative_norm(a));
        CHECK(E->in_base(nrm));
        norms.insert(nrm.code);
      }
    }
    CHECK(trace_zero == q);
    CHECK(norms.size() == q - 1);
    CHECK(!norms.count(0));
  }
}

TEST_CASE("relative trace is F_q-linear") {
  auto E = Field::create(5)->extend();
  const Field& K = *E->base();
  for (Elem a : E->elements())
    for (Elem c : K.elements())
      CHECK(E->relative_trace(E->mul(c, a)) == K.mul(c, E->relative_trace(a)));
}

TEST_CASE("coordinates are base-p digits") {
  auto f81 = Field::create(3, 2)->extend();
  CHECK(f81->degree() == 4);
  CHECK(f81->order() == 81);
  const auto c = f81->coordinates(Elem{1 + 2 * 3 + 0 * 9 + 1 * 27});
  CHECK(c == std::vector<std::uint32_t>{1, 2, 0, 1});
  CHECK(Field::create(3, 2)->same_as(*Field::create(3)->extend()));
  CHECK(!Field::create(3)->same_as(*Field::create(5)));
}
