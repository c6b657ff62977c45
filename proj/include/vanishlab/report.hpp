#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vanishlab/cases.hpp"
#include "vanishlab/counterexamples.hpp"
#include "vanishlab/density.hpp"
#include "vanishlab/text.hpp"

namespace vanishlab {

using Json = nlohmann::ordered_json;

/// A report is a list of flat records, each carrying a "record" key. Every
/// number that is not a count or index is an exact fraction string.
using Records = std::vector<Json>;

enum class Format { Text, Structured };

Json fraction(const Rational& q);
Json point_json(const Point& p);
Json certificate_json(const SeparationCertificate& c);
Json witness_json(const OrthantWitness& w);

Records profile_records(const VanishingProfile& prof, const VarNames& vars);
Records case_records(const CaseVerdict& v, const VarNames& vars);
Records meet_records(const OrthantMeet& meet);
Records ray_records(const RaySearchReport& r, const VarNames& vars);
Records dk_records(const DkReport& r);
Records ddv_records(const DdvReport& r);
Records dk_series_records(const DkSeriesReport& r);
Records binomial_gap_records(std::int64_t d, std::int64_t r, const BinomialGap& gap);

/// Structured: one compact JSON object per line. Text: one line per record,
/// "name  key=value ...".
void write_records(std::ostream& out, const Records& records, Format format);

}  // namespace vanishlab
