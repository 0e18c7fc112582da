#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rackwork/error.hpp"
#include "rackwork/trig.hpp"

using namespace rackwork;
namespace tp = trig_property;

TEST_CASE("trig context derives Pi and U") {
  const auto ctx = make_trig_context(fixtures::conj_s3(), 1, 4);
  CHECK(ctx.pi == fixtures::conj_dot(1, 4));
  CHECK(ctx.pi == 5);
  CHECK(ctx.u == fixtures::conj_dot(1, ctx.pi));
  CHECK(ctx.u == 4);

  for (Element e = 0; e < 3; ++e)
    for (Element o = 0; o < 3; ++o) {
      const auto t = make_trig_context(trivial_rack(3), e, o);
      CHECK(t.pi == o);
      CHECK(t.u == o);
    }

  const auto imp = make_trig_context(boolean_weak_rack_implication(2), 3, 0);
  CHECK(imp.pi == 0);
  CHECK(imp.u == 0);

  CHECK_THROWS_AS(make_trig_context(trivial_rack(2), 2, 0), Error);
  CHECK_THROWS_AS(make_trig_context(trivial_rack(2), 0, 5), Error);
}

TEST_CASE("cos and sin") {
  const auto ctx = make_trig_context(fixtures::conj_s3(), 1, 4);
  CHECK(t_cos(ctx, 4) == 5);
  CHECK(t_sin(ctx, 5) == 4);
  CHECK(t_sin(ctx, ctx.pi) == ctx.o);
  CHECK_THROWS_AS(t_cos(ctx, 6), Error);

  const auto triv = make_trig_context(trivial_rack(4), 2, 1);
  for (Element x = 0; x < 4; ++x) {
    CHECK(t_cos(triv, x) == x);
    CHECK(t_sin(triv, x) == x);
  }
  const auto point = make_trig_context(trivial_rack(1), 0, 0);
  CHECK(t_cos(point, 0) == 0);

  const auto imp = make_trig_context(boolean_weak_rack_implication(2), 3, 0);
  for (Element x = 0; x < 4; ++x) CHECK(t_sin(imp, x) == 0);
}

TEST_CASE("all nine properties hold on conj(S3)") {
  const auto report = check_trig_properties(make_trig_context(fixtures::conj_s3(), 1, 4));
  CHECK(report.properties.size() == 9);
  CHECK(report.passed_all());
  CHECK(report.get(tp::cos_dot).checked == 36);
  for (const auto& p : report.properties) CHECK_FALSE(p.full_rack_only);
}

TEST_CASE("every rack, every base point: the nine properties and sin o cos = id") {
  for (const auto& [name, s] : fixtures::fleet()) {
    if (s.kind() != Kind::rack) continue;
    for (Element e = 0; e < s.size(); ++e)
      for (Element o = 0; o < s.size(); ++o) {
        CAPTURE(name); CAPTURE(e); CAPTURE(o);
        const auto ctx = make_trig_context(s, e, o);
        const auto r = check_trig_properties(ctx);
        CHECK(r.passed_all());
        const auto c = cos_map(ctx);
        const auto sn = sin_map(ctx);
        for (Element x = 0; x < s.size(); ++x) {
          CHECK(sn[c[x]] == x);
          CHECK(c[sn[x]] == x);
        }
        CHECK(check_morphism(c, s, s).passed);
        CHECK(check_morphism(sn, s, s).passed);
      }
  }
}

TEST_CASE("implication weak rack: commuting form holds, inverse forms fail") {
  const auto ctx = make_trig_context(boolean_weak_rack_implication(2), 3, 0);
  const auto r = check_trig_properties(ctx);
  CHECK(r.get(tp::sin_cos_commute).passed);
  CHECK(r.get(tp::sin_cos_commute).checked == 4);

  const auto& sc = r.get(tp::sin_cos);
  CHECK(sc.full_rack_only);
  CHECK_FALSE(sc.passed);
  REQUIRE_FALSE(sc.witnesses.empty());
  // cos 1 = 3 -> 1 = 1, sin 1 = 1 \ 3 = 0 != 1.
  CHECK(sc.witnesses.front() == std::vector<Element>{1});
  CHECK_FALSE(r.get(tp::cos_sin).passed);

  // sin Pi = (e -> O) \ e = not e, which is O here.
  CHECK(r.get(tp::sin_pi).full_rack_only);
  CHECK(r.get(tp::sin_pi).passed);

  // sin is constantly 0 here while 0 -> 0 = top, so sin is no dot homomorphism.
  CHECK(r.get(tp::sin_diamond).passed);
  CHECK_FALSE(r.get(tp::sin_dot).passed);
  CHECK(r.get(tp::sin_dot).witnesses.front() == std::vector<Element>{0, 0});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.passed_all());
}

TEST_CASE("lattice weak rack: sin Pi = O fails") {
  // Pi = e | O and sin Pi = (e | O) & e = e.
  const auto ctx = make_trig_context(boolean_weak_rack_lattice(2), 1, 2);
  const auto r = check_trig_properties(ctx);
  const auto& sp = r.get(tp::sin_pi);
  CHECK(sp.full_rack_only);
  CHECK_FALSE(sp.passed);
  CHECK(sp.witnesses.front() == std::vector<Element>{ctx.pi});
  CHECK(t_sin(ctx, ctx.pi) == 1);
}

TEST_CASE("weak racks: sin(cos x) = cos(sin x) for every base point") {
  for (const auto& [name, s] : fixtures::fleet()) {
    if (s.kind() != Kind::weak_rack) continue;
    for (Element e = 0; e < s.size(); ++e) {
      CAPTURE(name); CAPTURE(e);
      const auto r = check_trig_properties(make_trig_context(s, e, 0));
      CHECK(r.get(tp::sin_cos_commute).passed);
      CHECK(r.get(tp::cos_pi).passed);
    }
  }
}

TEST_CASE("derived rack ab = cos b, a<>b = sin a") {
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(trig_derived_rack(make_trig_context(trivial_rack(n), 0, 0)) == trivial_rack(n));

  const auto d = trig_derived_rack(make_trig_context(fixtures::conj_s3(), 1, 4));
  const auto r = check_rack_axioms(d);
  CHECK(r.passed);
  CHECK(r.find(axiom::left_distributive)->checked == 216);
  for (Element a = 1; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(d.dot()(a, b) == d.dot()(0, b));

  CHECK_THROWS_AS(trig_derived_rack(make_trig_context(boolean_weak_rack_lattice(1), 0, 0)), Error);
  try {
    trig_derived_rack(make_trig_context(boolean_weak_rack_lattice(1), 0, 0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kind_mismatch);
  }
}
