#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "cfrenorm/coder.hpp"
#include "cfrenorm/growth.hpp"
#include "cfrenorm/io.hpp"
#include "cfrenorm/oracle.hpp"

namespace cfr::cli {

using io::json;

namespace {

std::vector<BigInt> parse_digit_list(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    BigInt d;
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || d.set_str(item, 10) != 0 ||
        d < 1)
      throw BadInput("cf digits must be positive integers separated by commas, got '" + item + "'");
    out.push_back(d);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

ExactNumber parse_number(std::string_view text) {
  try {
    return ExactNumber::parse(text);
  } catch (const std::exception& e) {
    throw BadInput(e.what());
  }
}

}  // namespace

ExactNumber parse_x(std::string_view text) {
  ExactNumber x;
  if (text == "golden") {
    x = golden_mean();
  } else if (text.substr(0, 3) == "cf:") {
    std::string_view body = text.substr(3);
    std::size_t semi = body.find(';');
    std::vector<BigInt> pre = semi == 0 ? std::vector<BigInt>{} : parse_digit_list(body.substr(0, semi));
    if (semi == std::string_view::npos) {
      x = evaluate_regular_cf(pre);
    } else {
      std::vector<BigInt> period = parse_digit_list(body.substr(semi + 1));
      x = periodic_cf_value(pre, period);
    }
  } else {
    x = parse_number(text);
  }
  if (x.sign() < 0 || x >= ExactNumber(1))
    throw BadInput("x must lie in [0,1), got " + x.str() + " from '" + std::string(text) + "'");
  return x;
}

SidedPoint parse_y(std::string_view text, const ExactNumber& x, std::optional<Side> side) {
  ExactNumber v = text == "yg" ? ExactNumber(1) / (ExactNumber(1) + x) : parse_number(text);
  if (v.sign() < 0 || v > ExactNumber(1))
    throw BadInput("y must lie in [0,1], got " + v.str() + " from '" + std::string(text) + "'");
  return side ? SidedPoint(v, *side) : SidedPoint(v);
}

Strategy parse_strategy(std::string_view name, const std::optional<std::string>& alpha) {
  auto need_alpha = [&]() {
    if (!alpha) throw BadInput("strategy '" + std::string(name) + "' needs --alpha");
    ExactNumber a = parse_number(*alpha);
    if (a.sign() < 0 || a > ExactNumber(1)) throw BadInput("--alpha must lie in [0,1]");
    return a;
  };
  if (alpha && name != "alpha" && name != "counter-alpha")
    throw BadInput("--alpha only applies to the alpha and counter-alpha strategies");
  if (name == "regular") return Strategy::regular();
  if (name == "backward") return Strategy::backward();
  if (name == "nearest-integer") return Strategy::nearest_integer();
  if (name == "lehner") return Strategy::lehner();
  if (name == "alpha") return Strategy::alpha(need_alpha());
  if (name == "counter-alpha") return Strategy::counter_alpha(need_alpha());
  throw BadInput("unknown strategy '" + std::string(name) +
                 "' (regular, backward, alpha, nearest-integer, counter-alpha, lehner)");
}

namespace {

struct Globals {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  std::optional<std::size_t> depth;
};

struct PointArgs {
  std::string x;
  std::optional<std::string> y;
  std::optional<std::string> side;
};

std::optional<Side> parse_side(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return *s == "left" ? Side::left : Side::right;
}

void add_point_options(CLI::App* cmd, PointArgs& p, bool y_required) {
  cmd->add_option("--x", p.x, "golden, p/q, decimal, sqrt expression or cf:a,b[;period]")->required();
  auto* y = cmd->add_option("--y", p.y, "point in [0,1] or yg for 1/(1+x)");
  if (y_required) y->required();
  cmd->add_option("--side", p.side, "side tag of y")->check(CLI::IsMember({"left", "right"}));
}

std::string sign_char(int e) { return e > 0 ? "+" : "-"; }

std::string move_str(const Move& m) { return std::string(edge_name(m.edge)) + ":" + m.a_hat.get_str(); }

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

// Each command fills `buf` and returns an exit code.
using Command = std::function<int(const Globals&, std::ostream& buf)>;

int cmd_expand(const Globals& g, std::ostream& buf, const PointArgs& p,
               const std::optional<std::string>& strategy, const std::optional<std::string>& alpha) {
  ExactNumber x = parse_x(p.x);
  if (x.is_zero()) throw BadInput("expand needs 0 < x < 1");
  if (strategy && p.y) throw BadInput("give either --strategy or --y, not both");
  Strategy s = p.y ? Strategy::from_y(parse_y(*p.y, x, parse_side(p.side)))
                   : parse_strategy(strategy.value_or("regular"), alpha);
  std::size_t depth = g.depth.value_or(20);
  Expansion e = expand(x, s, depth);
  const ConvergentTable& t = e.convergents;
  if (g.format == "json") {
    json j = io::to_json(e);
    j = json{{"schema", io::kSchemaVersion}, {"command", "expand"}, {"x", x.str()},
             {"strategy", s.name()}, {"depth", depth}, {"expansion", j}};
    buf << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    buf << "n,sign,digit,p,q\n";
    for (std::size_t n = 0; n < e.cf.size(); ++n)
      buf << n + 1 << ',' << e.cf.signs[n] << ',' << e.cf.digits[n] << ',' << t.p(static_cast<long>(n) + 1) << ','
          << t.q(static_cast<long>(n) + 1) << '\n';
  } else {
    std::vector<std::string> digits, signs, conv, trace;
    for (std::size_t n = 0; n < e.cf.size(); ++n) {
      digits.push_back(e.cf.digits[n].get_str());
      signs.push_back(sign_char(e.cf.signs[n]));
      conv.push_back(t.p(static_cast<long>(n) + 1).get_str() + "/" + t.q(static_cast<long>(n) + 1).get_str());
    }
    for (const Move& m : e.trace) trace.push_back(move_str(m));
    buf << "x: " << x << '\n'
        << "strategy: " << s.name() << '\n'
        << "steps: " << e.trace.size() << '\n'
        << "terminal: " << (e.terminal ? "yes" : "no") << '\n'
        << "integer_part: " << e.cf.integer_part << '\n'
        << "digits: " << join(digits) << '\n'
        << "signs: " << join(signs) << '\n'
        << "convergents: " << join(conv) << '\n'
        << "trace: " << join(trace) << '\n';
    if (!e.last_digit_final) buf << "note: last digit is provisional\n";
  }
  return e.terminal && e.trace.size() < depth ? kTruncated : kOk;
}

Word flip_at(const Word& w, std::uint64_t index) {
  std::string s = w.str();
  if (index >= s.size()) throw BadInput("--inject-mismatch index " + std::to_string(index) + " is past the word end");
  s[index] = s[index] == 'A' ? 'B' : 'A';
  return Word::parse(s);
}

Speed parse_speed(const std::string& s) { return s == "slow" ? Speed::slow : Speed::fast; }

int cmd_code(const Globals& g, std::ostream& buf, const PointArgs& p, std::optional<std::uint64_t> length,
             const std::string& speed_name_arg, std::optional<std::uint64_t> inject) {
  ExactNumber x = parse_x(p.x);
  SidedPoint y = parse_y(*p.y, x, parse_side(p.side));
  std::uint64_t len = length.value_or(g.depth.value_or(100));
  Speed speed = parse_speed(speed_name_arg);
  Word brute = oracle::omega(x, y, len);
  Word built = substitution_coding(x, y, len, speed);
  if (inject) built = flip_at(built, *inject);
  std::optional<std::uint64_t> diff = first_mismatch(brute, built);
  const char* verdict = diff ? "MISMATCH" : "MATCH";
  if (g.format == "json") {
    json j{{"schema", io::kSchemaVersion}, {"command", "code"}, {"x", x.str()}, {"y", io::to_json(y)},
           {"length", len}, {"speed", speed_name(speed)}, {"omega", brute.str()}, {"substitution", built.str()},
           {"verdict", verdict}};
    j["first_mismatch"] = diff ? json(*diff) : json(nullptr);
    buf << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    buf << "index,omega,substitution\n";
    std::string a = brute.str(), b = built.str();
    for (std::size_t i = 0; i < a.size(); ++i) buf << i << ',' << a[i] << ',' << b[i] << '\n';
  } else {
    buf << "x: " << x << '\n'
        << "y: " << y.str() << '\n'
        << "length: " << len << '\n'
        << "speed: " << speed_name(speed) << '\n'
        << "omega:        " << brute.str() << '\n'
        << "substitution: " << built.str() << '\n'
        << "verdict: " << verdict << '\n';
    if (diff) buf << "first_mismatch: " << *diff << '\n';
  }
  return diff ? kVerifyFailed : kOk;
}

int cmd_approx(const Globals& g, std::ostream& buf, const PointArgs& p, const std::optional<std::string>& strategy,
               const std::optional<std::string>& alpha, const std::string& speed_arg, bool verify) {
  ExactNumber x = parse_x(p.x);
  std::size_t depth = g.depth.value_or(20);
  Speed speed = parse_speed(speed_arg);
  if (strategy && p.y) throw BadInput("give either --strategy or --y, not both");
  if (!strategy && !p.y) throw BadInput("approx needs --y or --strategy");
  if (strategy && speed == Speed::fast) throw BadInput("--strategy drives the slow map; use --speed slow");
  if (verify && speed == Speed::fast) throw BadInput("--verify compares slow states; use --speed slow");
  std::optional<SidedPoint> y;
  ApproxTrace t;
  std::string label;
  if (p.y) {
    y = parse_y(*p.y, x, parse_side(p.side));
    t = approx_trace(x, *y, depth, speed);
    label = y->str();
  } else {
    Strategy s = parse_strategy(*strategy, alpha);
    std::vector<Move> moves = strategy_moves(x, s, depth);
    t = approx_trace(moves);
    t.terminal = moves.size() < depth;
    label = s.name();
  }
  std::vector<NestedInterval> iv;
  for (const EndpointLengths& e : t.states) iv.push_back(make_interval(x, e.rho0, e.rho1, e.k));

  std::optional<std::size_t> verify_bad;
  std::size_t verified = 0;
  if (verify) {
    if (!y) throw BadInput("--verify needs --y");
    oracle::NestedIntervals o = oracle::nested_intervals(x, *y, depth);
    for (std::size_t j = 0; j < o.intervals.size() && j < iv.size(); ++j) {
      if (o.intervals[j].left != iv[j].left || o.intervals[j].right != iv[j].right) {
        verify_bad = j;
        break;
      }
      ++verified;
    }
  }

  if (g.format == "json") {
    json states = json::array();
    for (std::size_t j = 0; j < t.states.size(); ++j) {
      json s = io::to_json(t.states[j]);
      s["left"] = iv[j].left.str();
      s["right"] = iv[j].right.str();
      states.push_back(s);
    }
    json j{{"schema", io::kSchemaVersion}, {"command", "approx"}, {"x", x.str()}, {"y", label},
           {"speed", speed_name(speed)}, {"states", states}, {"terminal", t.terminal}};
    if (verify) {
      j["verified"] = verified;
      j["verify_ok"] = !verify_bad.has_value();
    }
    buf << j.dump(2) << '\n';
  } else {
    if (g.format == "text") buf << "x: " << x << "\ny: " << label << "\nspeed: " << speed_name(speed) << '\n';
    buf << (g.format == "csv" ? "k,rho0,rho1,eps,N,left,right\n" : "k rho0 rho1 eps N left right\n");
    const char sep = g.format == "csv" ? ',' : ' ';
    for (std::size_t j = 0; j < t.states.size(); ++j) {
      const EndpointLengths& e = t.states[j];
      buf << e.k << sep << e.rho0 << sep << e.rho1 << sep << e.eps << sep << e.max() << sep << iv[j].left << sep
          << iv[j].right << '\n';
    }
    if (g.format == "text") {
      buf << "terminal: " << (t.terminal ? "yes" : "no") << '\n';
      if (verify) buf << "verify: " << (verify_bad ? "FAIL at k=" + std::to_string(*verify_bad) : "OK") << " ("
                      << verified << " states)\n";
    }
  }
  if (verify_bad) return kVerifyFailed;
  return t.terminal && t.steps() < depth ? kTruncated : kOk;
}

int cmd_partition(const Globals& g, std::ostream& buf, const PointArgs& p) {
  ExactNumber x = parse_x(p.x);
  SidedPoint y = parse_y(*p.y, x, parse_side(p.side));
  std::size_t depth = g.depth.value_or(0);
  struct Row {
    ExactNumber x;
    SidedPoint y;
    std::optional<PartitionCell> cell;
    std::optional<Move> move;
  };
  std::vector<Row> rows;
  ExactNumber cx = x;
  SidedPoint cy = y;
  bool terminal = false;
  for (std::size_t j = 0; j <= depth; ++j) {
    Row r{cx, cy, classify_fast(cx, cy), std::nullopt};
    if (j < depth) {
      std::optional<SlowStep> s = t_slow(cx, cy);
      if (s) {
        r.move = s->move();
        cx = s->next_x;
        cy = s->next_y;
      }
    }
    rows.push_back(r);
    if (!rows.back().cell) {
      terminal = true;
      break;
    }
  }
  if (g.format == "json") {
    json steps = json::array();
    for (const Row& r : rows) {
      json s{{"x", r.x.str()}, {"y", io::to_json(r.y)}};
      s["cell"] = r.cell ? io::to_json(*r.cell) : json(nullptr);
      s["move"] = r.move ? io::to_json(*r.move) : json(nullptr);
      steps.push_back(s);
    }
    json j{{"schema", io::kSchemaVersion}, {"command", "partition"}, {"x", x.str()}, {"y", io::to_json(y)},
           {"cell", rows[0].cell ? json(rows[0].cell->str()) : json(nullptr)}, {"trace", steps},
           {"terminal", terminal}};
    buf << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    buf << "step,x,y,side,cell,edge,a_hat\n";
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const Row& r = rows[j];
      buf << j << ',' << r.x << ',' << r.y.value() << ',' << (r.y.side() == Side::left ? "left" : "right") << ','
          << (r.cell ? r.cell->str() : "terminal") << ',' << (r.move ? edge_name(r.move->edge) : "") << ','
          << (r.move ? r.move->a_hat.get_str() : "") << '\n';
    }
  } else {
    buf << "x: " << x << "\ny: " << y.str() << "\ncell: " << (rows[0].cell ? rows[0].cell->str() : "terminal")
        << '\n';
    if (depth > 0) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const Row& r = rows[j];
        buf << j << ' ' << (r.cell ? r.cell->str() : "terminal");
        if (r.move) buf << ' ' << move_str(*r.move);
        buf << '\n';
      }
    }
  }
  return terminal && rows.size() <= depth ? kTruncated : kOk;
}

struct LevyArgs {
  std::size_t trials = 200;
  std::vector<std::size_t> depths;
  std::optional<std::string> strategy;
  std::optional<std::string> alpha;
  bool random_y = false;
  std::string source = "q-slow";
  std::string sampler = "dyadic";
  unsigned threads = 0;
  bool values = false;
};

int cmd_levy(const Globals& g, std::ostream& buf, const LevyArgs& a) {
  MonteCarloConfig c;
  c.trials = a.trials;
  c.depths = a.depths.empty() ? std::vector<std::size_t>{g.depth.value_or(5000)} : a.depths;
  for (std::size_t d : c.depths)
    if (d == 0) throw BadInput("depths must be positive");
  if (c.trials == 0) throw BadInput("--trials must be positive");
  if (a.random_y && a.strategy) throw BadInput("--random-y replaces --strategy; give one of them");
  c.strategy = parse_strategy(a.strategy.value_or("regular"), a.alpha);
  c.random_y = a.random_y;
  c.source = *parse_source(a.source);
  c.seed = g.seed;
  c.sampler = a.sampler == "digits" ? Sampler::digits : Sampler::dyadic;
  c.threads = a.threads;
  MonteCarloResult r = monte_carlo_levy(c);
  if (g.format == "json") {
    json j = io::summary_json(r);
    j["command"] = "levy";
    j["reference"] = kLevyConstant;
    if (a.values) {
      json vals = json::array();
      for (const TrialValue& v : r.values)
        vals.push_back({{"trial", v.trial}, {"depth", v.depth}, {"value", v.value}, {"terminal", v.terminal}});
      j["values"] = vals;
    }
    buf << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    io::write_levy_csv(buf, r);
  } else {
    buf << "strategy: " << (c.random_y ? std::string("from-y(random)") : c.strategy.name()) << '\n'
        << "source: " << source_name(c.source) << '\n'
        << "sampler: " << sampler_name(c.sampler) << '\n'
        << "trials: " << c.trials << '\n'
        << "seed: " << c.seed << '\n';
    for (const DepthSummary& s : r.summaries)
      buf << "depth " << s.depth << ": mean " << io::format_double(s.mean) << " stddev "
          << io::format_double(s.stddev) << " stderr " << io::format_double(s.stderr_of_mean)
          << " terminated " << s.terminated << '\n';
    buf << "reference: " << io::format_double(kLevyConstant) << '\n';
  }
  return kOk;
}

ExactNumber random_rational(std::mt19937_64& rng, std::uint64_t max_den) {
  std::uniform_int_distribution<std::uint64_t> den(2, max_den);
  std::uint64_t q = den(rng);
  std::uniform_int_distribution<std::uint64_t> num(1, q - 1);
  return ExactNumber::rational(BigInt(std::to_string(num(rng))), BigInt(std::to_string(q)));
}

int cmd_selftest(const Globals& g, std::ostream& buf) {
  std::vector<std::pair<std::string, bool>> checks;
  std::mt19937_64 rng = trial_rng(g.seed, 0);

  bool coding = true;
  for (int t = 0; t < 30 && coding; ++t) {
    ExactNumber x = random_rational(rng, 100000);
    SidedPoint y(random_rational(rng, 100000));
    Word brute = oracle::omega(x, y, 300);
    coding = brute == substitution_coding(x, y, 300, Speed::slow) && brute == substitution_coding(x, y, 300, Speed::fast);
  }
  checks.emplace_back("coding matches rotation oracle", coding);

  ExactNumber phi = golden_mean();
  SidedPoint yg(ExactNumber(1) / (ExactNumber(1) + phi));
  SlowOrbit orbit = slow_orbit(phi, yg, 100);
  bool green = orbit.steps.size() == 100;
  for (const SlowStep& s : orbit.steps) green = green && s.edge == Edge::green;
  checks.emplace_back("golden orbit stays green", green);

  bool endpoints = true;
  for (int t = 0; t < 10 && endpoints; ++t) {
    ExactNumber x = random_rational(rng, 100000);
    SidedPoint y(random_rational(rng, 100000));
    ApproxTrace tr = approx_trace(x, y, 12, Speed::slow);
    oracle::NestedIntervals o = oracle::nested_intervals(x, y, 12);
    for (std::size_t j = 0; j < o.intervals.size() && j < tr.states.size(); ++j) {
      NestedInterval m = make_interval(x, tr.states[j].rho0, tr.states[j].rho1, j);
      endpoints = endpoints && m.left == o.intervals[j].left && m.right == o.intervals[j].right;
    }
  }
  checks.emplace_back("endpoint words match nested intervals", endpoints);

  bool rewrite = true;
  Expansion e = expand(ExactNumber::parse("sqrt(2)-1"), Strategy::regular(), 8);
  ExactNumber v = evaluate(e.cf);
  SemiRegularCF ins = insert(e.cf, 1);
  rewrite = evaluate(ins) == v && evaluate(singularize(ins, 1)) == v && singularize(ins, 1) == e.cf;
  checks.emplace_back("insert and singularize keep the value", rewrite);

  bool strategies = true;
  for (int t = 0; t < 10; ++t) {
    ExactNumber x = random_rational(rng, 1000000);
    strategies = strategies && expand(x, Strategy::alpha(1), 30).cf == expand(x, Strategy::regular(), 30).cf &&
                 expand(x, Strategy::alpha(0), 30).cf == expand(x, Strategy::backward(), 30).cf;
  }
  checks.emplace_back("alpha endpoints match regular and backward", strategies);

  MonteCarloConfig c;
  c.trials = 20;
  c.depths = {2000};
  c.seed = g.seed;
  c.threads = 1;
  double mean = monte_carlo_levy(c).summaries[0].mean;
  checks.emplace_back("levy estimate within 5%", std::abs(mean - kLevyConstant) < 0.05 * kLevyConstant);

  bool all = true;
  if (g.format == "json") {
    json arr = json::array();
    for (auto& [name, ok] : checks) {
      arr.push_back({{"check", name}, {"pass", ok}});
      all = all && ok;
    }
    buf << json{{"schema", io::kSchemaVersion}, {"command", "selftest"}, {"checks", arr}, {"pass", all}}.dump(2)
        << '\n';
  } else {
    if (g.format == "csv") buf << "check,pass\n";
    for (auto& [name, ok] : checks) {
      all = all && ok;
      if (g.format == "csv") buf << name << ',' << (ok ? 1 : 0) << '\n';
      else buf << (ok ? "PASS " : "FAIL ") << name << '\n';
    }
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions through renormalization of circle rotations", "cfrenorm"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--depth", g.depth, "number of steps");

  Command selected;

  PointArgs ep;
  std::optional<std::string> e_strategy, e_alpha;
  auto* expand_cmd = app.add_subcommand("expand", "semi-regular continued fraction of x");
  add_point_options(expand_cmd, ep, false);
  expand_cmd->add_option("--strategy", e_strategy, "branch strategy");
  expand_cmd->add_option("--alpha", e_alpha, "parameter of alpha strategies");
  expand_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) { return cmd_expand(gl, b, ep, e_strategy, e_alpha); };
  });

  PointArgs cp;
  std::optional<std::uint64_t> c_length, c_inject;
  std::string c_speed = "fast";
  auto* code_cmd = app.add_subcommand("code", "rotation coding against the substitution cocycle");
  add_point_options(code_cmd, cp, true);
  code_cmd->add_option("--length", c_length, "prefix length (defaults to --depth, then 100)");
  code_cmd->add_option("--speed", c_speed, "slow or fast cocycle")->check(CLI::IsMember({"slow", "fast"}));
  code_cmd->add_option("--inject-mismatch", c_inject, "test mode: flip the built word at this index");
  code_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) {
      return cmd_code(gl, b, cp, c_length, c_speed, c_inject);
    };
  });

  PointArgs ap;
  std::optional<std::string> a_strategy, a_alpha;
  std::string a_speed = "slow";
  bool a_verify = false;
  auto* approx_cmd = app.add_subcommand("approx", "approximating sequence and nested intervals");
  add_point_options(approx_cmd, ap, false);
  approx_cmd->add_option("--strategy", a_strategy, "drive the slow map by a strategy instead of y");
  approx_cmd->add_option("--alpha", a_alpha, "parameter of alpha strategies");
  approx_cmd->add_option("--speed", a_speed, "slow or fast")->check(CLI::IsMember({"slow", "fast"}));
  approx_cmd->add_flag("--verify", a_verify, "check endpoints against the rotation oracle");
  approx_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) {
      return cmd_approx(gl, b, ap, a_strategy, a_alpha, a_speed, a_verify);
    };
  });

  PointArgs pp;
  auto* part_cmd = app.add_subcommand("partition", "fast-map cell of (x, y) and its slow-step trace");
  add_point_options(part_cmd, pp, true);
  part_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) { return cmd_partition(gl, b, pp); };
  });

  LevyArgs la;
  auto* levy_cmd = app.add_subcommand("levy", "Monte Carlo growth constant");
  levy_cmd->add_option("--trials", la.trials, "number of trials");
  levy_cmd->add_option("--depths", la.depths, "record these depths (overrides --depth)")->delimiter(',');
  levy_cmd->add_option("--strategy", la.strategy, "branch strategy");
  levy_cmd->add_option("--alpha", la.alpha, "parameter of alpha strategies");
  levy_cmd->add_flag("--random-y", la.random_y, "follow the slow map at an independent random y");
  levy_cmd->add_option("--source", la.source, "magnitude source")
      ->check(CLI::IsMember({"q-slow", "q-fast", "word-slow", "word-fast"}));
  levy_cmd->add_option("--sampler", la.sampler, "random x sampler")->check(CLI::IsMember({"dyadic", "digits"}));
  levy_cmd->add_option("--threads", la.threads, "worker threads (0 = all cores)");
  levy_cmd->add_flag("--values", la.values, "include per-trial values in JSON output");
  levy_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) { return cmd_levy(gl, b, la); };
  });

  auto* self_cmd = app.add_subcommand("selftest", "quick internal consistency checks");
  self_cmd->callback([&] {
    selected = [&](const Globals& gl, std::ostream& b) { return cmd_selftest(gl, b); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kBadInput;
  }

  std::ostringstream buf;
  int code;
  try {
    code = selected(g, buf);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const oracle::BoundedSearchFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }

  if (g.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << g.out << " for writing\n";
      return kBadInput;
    }
    f << buf.str();
  }
  if (code == kTruncated) err << "note: orbit reached the terminal state before the requested depth\n";
  return code;
}

}  // namespace cfr::cli
