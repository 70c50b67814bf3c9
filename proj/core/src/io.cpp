#include "cfrenorm/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace cfr::io {

json big(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 62) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer: " + j.dump());
    return v;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json to_json(const ExactNumber& x) { return x.str(); }

json to_json(const SidedPoint& y) {
  return {{"value", y.value().str()}, {"side", y.side() == Side::left ? "left" : "right"}};
}

json to_json(const Move& m) { return {{"edge", edge_name(m.edge)}, {"a_hat", big(m.a_hat)}}; }

json to_json(const SlowStep& s) {
  return {{"edge", edge_name(s.edge)},
          {"a_hat", big(s.a_hat)},
          {"x", to_json(s.next_x)},
          {"y", to_json(s.next_y)}};
}

json to_json(const PartitionCell& c) {
  return {{"cell", c.str()}, {"kind", c.kind == CellKind::PG ? "PG" : "PR"}, {"i", big(c.i)}, {"n", big(c.n)}};
}

json to_json(const FastStep& s) {
  json j = to_json(s.cell);
  j["x"] = to_json(s.next_x);
  j["y"] = to_json(s.next_y);
  return j;
}

json to_json(const SlowOrbit& o) {
  json steps = json::array();
  for (const SlowStep& s : o.steps) steps.push_back(to_json(s));
  return {{"steps", steps}, {"terminal", o.terminal}};
}

json to_json(const FastOrbit& o) {
  json steps = json::array();
  for (const FastStep& s : o.steps) steps.push_back(to_json(s));
  return {{"steps", steps}, {"terminal", o.terminal}};
}

json to_json(const SubMatrix& m) {
  return json::array({json::array({big(m(0, 0)), big(m(0, 1))}), json::array({big(m(1, 0)), big(m(1, 1))})});
}

json to_json(const Substitution& s) {
  return {{"A", s.image(Letter::A).str()}, {"B", s.image(Letter::B).str()}};
}

json to_json(const SemiRegularCF& cf) {
  json digits = json::array();
  for (const BigInt& d : cf.digits) digits.push_back(big(d));
  return {{"integer_part", big(cf.integer_part)}, {"digits", digits}, {"signs", cf.signs}};
}

SemiRegularCF cf_from_json(const json& j) {
  SemiRegularCF cf;
  if (j.contains("integer_part")) cf.integer_part = big_from(j.at("integer_part"));
  for (const json& d : j.at("digits")) cf.digits.push_back(big_from(d));
  cf.signs = j.at("signs").get<std::vector<int>>();
  return cf;
}

json convergents_json(const ConvergentTable& t) {
  json out = json::array();
  for (long n = 0; n <= static_cast<long>(t.size()); ++n)
    out.push_back({{"n", n}, {"p", t.p(n).get_str()}, {"q", t.q(n).get_str()}});
  return out;
}

json to_json(const Expansion& e) {
  json trace = json::array();
  for (const Move& m : e.trace) trace.push_back(to_json(m));
  json j = to_json(e.cf);
  j["convergents"] = convergents_json(e.convergents);
  j["trace"] = trace;
  j["terminal"] = e.terminal;
  j["last_digit_final"] = e.last_digit_final;
  return j;
}

json to_json(const NestedInterval& i) {
  return {{"k", i.k},
          {"left_index", big(i.left_index)},
          {"right_index", big(i.right_index)},
          {"left", to_json(i.left)},
          {"right", to_json(i.right)}};
}

json to_json(const EndpointLengths& e) {
  return {{"k", e.k}, {"rho0", big(e.rho0)}, {"rho1", big(e.rho1)}, {"eps", e.eps}, {"N", big(e.max())}};
}

json to_json(const GrowthSeries& g) {
  json pts = json::array();
  for (const GrowthPoint& p : g.points) pts.push_back({{"k", p.k}, {"value", p.value}});
  return {{"source", source_name(g.source)},
          {"points", pts},
          {"terminal", g.terminal},
          {"slow_steps", g.slow_steps}};
}

json to_json(const MonteCarloConfig& c) {
  return {{"trials", c.trials},
          {"depths", c.depths},
          {"strategy", c.random_y ? std::string("from-y(random)") : c.strategy.name()},
          {"source", source_name(c.source)},
          {"seed", c.seed},
          {"sampler", sampler_name(c.sampler)}};
}

json summary_json(const MonteCarloResult& r) {
  json sums = json::array();
  for (const DepthSummary& s : r.summaries)
    sums.push_back({{"depth", s.depth},
                    {"mean", s.mean},
                    {"stddev", s.stddev},
                    {"stderr", s.stderr_of_mean},
                    {"terminated", s.terminated}});
  return {{"schema", kSchemaVersion}, {"config", to_json(r.config)}, {"summaries", sums}};
}

void write_levy_csv(std::ostream& os, const MonteCarloResult& r) {
  os << "trial,depth,source,value\n";
  for (const TrialValue& v : r.values)
    os << v.trial << ',' << v.depth << ',' << source_name(r.config.source) << ','
       << format_double(v.value) << '\n';
}

void write_series_csv(std::ostream& os, const GrowthSeries& g) {
  os << "k,value\n";
  for (const GrowthPoint& p : g.points) os << p.k << ',' << format_double(p.value) << '\n';
}

}  // namespace cfr::io
