#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "cfrenorm/cf.hpp"
#include "cfrenorm/coder.hpp"
#include "cfrenorm/growth.hpp"
#include "cfrenorm/renorm.hpp"

namespace cfr::io {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

// Big integers become JSON numbers when they fit in 64 bits and decimal strings otherwise.
json big(const BigInt& v);
BigInt big_from(const json& j);
std::string format_double(double v);

json to_json(const ExactNumber& x);
json to_json(const SidedPoint& y);
json to_json(const Move& m);
json to_json(const SlowStep& s);
json to_json(const PartitionCell& c);
json to_json(const FastStep& s);
json to_json(const SlowOrbit& o);
json to_json(const FastOrbit& o);
json to_json(const SubMatrix& m);
json to_json(const Substitution& s);
json to_json(const SemiRegularCF& cf);
SemiRegularCF cf_from_json(const json& j);
json convergents_json(const ConvergentTable& t);
json to_json(const Expansion& e);
json to_json(const NestedInterval& i);
json to_json(const EndpointLengths& e);
json to_json(const GrowthSeries& g);
json to_json(const MonteCarloConfig& c);
json summary_json(const MonteCarloResult& r);

// trial,depth,source,value
void write_levy_csv(std::ostream& os, const MonteCarloResult& r);
// k,value
void write_series_csv(std::ostream& os, const GrowthSeries& g);

}  // namespace cfr::io
