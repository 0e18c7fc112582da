#include "rackwork/trig.hpp"

#include <algorithm>
#include <string>

#include "rackwork/error.hpp"

namespace rackwork {

namespace {

void require_element(const Structure& s, Element x, const char* what) {
  if (x >= s.size())
    throw Error(ErrorCode::index_out_of_range,
                std::string(what) + " = " + std::to_string(x) + " on carrier of size " + std::to_string(s.size()));
}

}  // namespace

TrigContext make_trig_context(Structure s, Element e, Element o) {
  require_element(s, e, "e");
  require_element(s, o, "O");
  const Element pi = s.dot()(e, o);
  const Element u = s.dot()(e, pi);
  return TrigContext{std::move(s), e, o, pi, u};
}

Element t_cos(const TrigContext& ctx, Element x) {
  require_element(ctx.s, x, "x");
  return ctx.s.dot()(ctx.e, x);
}

Element t_sin(const TrigContext& ctx, Element x) {
  require_element(ctx.s, x, "x");
  return ctx.s.diamond()(x, ctx.e);
}

const PropertyResult& TrigReport::get(std::string_view property) const {
  for (const auto& p : properties)
    if (p.property == property) return p;
  throw Error(ErrorCode::index_out_of_range, "no property \"" + std::string(property) + "\"");
}

bool TrigReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.full_rack_only || p.passed; });
}

bool TrigReport::passed_all() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

TrigReport check_trig_properties(const TrigContext& ctx, const ReportOptions& opt) {
  const std::size_t n = ctx.s.size();
  const auto& dot = ctx.s.dot();
  const auto& dm = ctx.s.diamond();
  const Element e = ctx.e;
  auto cos = [&](Element x) { return dot(e, x); };
  auto sin = [&](Element x) { return dm(x, e); };
  const bool rack = ctx.s.kind() == Kind::rack;
  const std::size_t limit = opt.limit();

  TrigReport report{ctx.pi, ctx.u, {}};
  auto record = [&](std::string_view id, bool full_rack_only) -> PropertyResult& {
    report.properties.push_back({std::string(id), true, 0, {}, full_rack_only && !rack});
    return report.properties.back();
  };
  auto fail = [&](PropertyResult& p, std::vector<Element> w) {
    p.passed = false;
    if (p.witnesses.size() < limit) p.witnesses.push_back(std::move(w));
  };
  auto unary = [&](std::string_view id, bool full_rack_only, auto&& holds) {
    auto& p = record(id, full_rack_only);
    for (Element x = 0; x < n; ++x, ++p.checked)
      if (!holds(x)) fail(p, {x});
  };
  auto binary = [&](std::string_view id, auto&& holds) {
    auto& p = record(id, false);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y, ++p.checked)
        if (!holds(x, y)) fail(p, {x, y});
  };

  {
    auto& p = record(trig_property::cos_pi, false);
    p.checked = 1;
    if (cos(ctx.pi) != ctx.u) fail(p, {ctx.pi});
  }
  {
    auto& p = record(trig_property::sin_pi, true);
    p.checked = 1;
    if (sin(ctx.pi) != ctx.o) fail(p, {ctx.pi});
  }
  binary(trig_property::cos_dot, [&](Element x, Element y) { return cos(dot(x, y)) == dot(cos(x), cos(y)); });
  binary(trig_property::cos_diamond, [&](Element x, Element y) { return cos(dm(x, y)) == dm(cos(x), cos(y)); });
  binary(trig_property::sin_dot, [&](Element x, Element y) { return sin(dot(x, y)) == dot(sin(x), sin(y)); });
  binary(trig_property::sin_diamond, [&](Element x, Element y) { return sin(dm(x, y)) == dm(sin(x), sin(y)); });
  unary(trig_property::sin_cos, true, [&](Element x) { return sin(cos(x)) == x; });
  unary(trig_property::cos_sin, true, [&](Element x) { return cos(sin(x)) == x; });
  unary(trig_property::sin_cos_commute, false, [&](Element x) { return sin(cos(x)) == cos(sin(x)); });
  return report;
}

Structure trig_derived_rack(const TrigContext& ctx) {
  if (ctx.s.kind() != Kind::rack)
    throw Error(ErrorCode::kind_mismatch,
                "the derived rack needs a rack, got " + std::string(to_string(ctx.s.kind())));
  const std::size_t n = ctx.s.size();
  return make_structure(tabulate(n, [&](Element, Element b) { return ctx.s.dot()(ctx.e, b); }),
                        tabulate(n, [&](Element a, Element) { return ctx.s.diamond()(a, ctx.e); }), Kind::rack);
}

std::vector<Element> cos_map(const TrigContext& ctx) {
  std::vector<Element> f(ctx.s.size());
  for (Element x = 0; x < f.size(); ++x) f[x] = ctx.s.dot()(ctx.e, x);
  return f;
}

std::vector<Element> sin_map(const TrigContext& ctx) {
  std::vector<Element> f(ctx.s.size());
  for (Element x = 0; x < f.size(); ++x) f[x] = ctx.s.diamond()(x, ctx.e);
  return f;
}

}  // namespace rackwork
