#include "aplab/io.hpp"

#include <sstream>

#include "aplab/errors.hpp"

namespace aplab {

Json interval_to_json(const Interval& iv) {
  Json j;
  j["start"] = fraction_str(iv.start);
  j["end"] = fraction_str(iv.end);
  if (iv.body.is_coloured()) {
    j["kind"] = "coloured";
    j["colour"] = to_string(iv.body.colour());
  } else {
    j["kind"] = "uncoloured";
    j["ivl_type"] = to_string(iv.body.ivl_type());
    j["direction"] = iv.body.direction();
  }
  return j;
}

Json config_to_json(const Configuration& c) {
  Json j;
  j["construction"] = to_string(c.construction);
  j["level"] = c.level;
  Json arr = Json::array();
  for (const auto& iv : c.intervals) arr.push_back(interval_to_json(iv));
  j["intervals"] = std::move(arr);
  return j;
}

std::string config_to_csv(const Configuration& c) {
  std::ostringstream out;
  out << "start,end,kind,colour,ivl_type,direction\n";
  for (const auto& iv : c.intervals) {
    out << fraction_str(iv.start) << ',' << fraction_str(iv.end) << ',';
    if (iv.body.is_coloured())
      out << "coloured," << to_string(iv.body.colour()) << ",,";
    else
      out << "uncoloured,," << to_string(iv.body.ivl_type()) << ',' << iv.body.direction();
    out << '\n';
  }
  return out.str();
}

Json witness_to_json(const APWitness& w) {
  return Json{{"start", w.start}, {"d", w.d}, {"a", w.pattern.a}, {"b", w.pattern.b}};
}

Json certificate_to_json(const SearchCertificate& cert) {
  Json j;
  j["verified"] = cert.verified;
  j["pairs_scanned"] = cert.pairs_scanned;
  if (cert.counterexample) j["counterexample"] = witness_to_json(*cert.counterexample);
  return j;
}

Json report_to_json(const StructureReport& report) {
  Json j;
  j["level"] = report.level;
  j["all_pass"] = report.all_pass();
  Json arr = Json::array();
  for (const auto& c : report.checks)
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(arr);
  return j;
}

Json measures_to_json(const LevelMeasures& m) {
  return Json{{"red", fraction_str(m.red)},
              {"blue", fraction_str(m.blue)},
              {"uncoloured", fraction_str(m.uncoloured)}};
}

Json ladder_to_json(const Ladder& ladder) {
  Json terms = Json::array();
  for (const auto& t : ladder.terms) terms.push_back(fraction_str(t));
  return Json{{"case_id", ladder.case_id},
              {"anchor", fraction_str(ladder.anchor)},
              {"diff", fraction_str(ladder.diff)},
              {"terms", std::move(terms)}};
}

Json findability_to_json(const FindabilityReport& report) {
  Json per_prime = Json::array();
  for (const auto& row : report.per_prime) {
    Json r;
    r["p"] = row.p;
    r["trials"] = row.trials;
    r["with_witness"] = row.with_witness;
    r["fraction"] = row.trials > 0 ? static_cast<double>(row.with_witness) / row.trials : 0.0;
    Json wf = Json::array();
    for (const auto& c : row.witness_free) wf.push_back(colouring_to_text(c));
    r["witness_free"] = std::move(wf);
    per_prime.push_back(std::move(r));
  }
  return Json{{"pattern", Json{{"a", report.pattern.a}, {"b", report.pattern.b}}},
              {"delta", report.delta},
              {"trials", report.trials},
              {"seed", report.seed},
              {"per_prime", std::move(per_prime)}};
}

namespace {

Json meta_to_json(const ColouringMeta& meta) {
  Json j;
  j["source"] = meta.source;
  j["depth"] = meta.depth;
  j["unresolved_count"] = meta.unresolved_count;
  if (meta.fill) j["fill"] = to_string(*meta.fill);
  return j;
}

}  // namespace

Json colouring_to_json(const CyclicColouring& c) {
  std::string s;
  s.reserve(c.colours.size());
  for (const auto col : c.colours) s.push_back(col == Colour::Red ? 'R' : 'B');
  return Json{{"p", c.p}, {"colours", std::move(s)}, {"meta", meta_to_json(c.meta)}};
}

Json colouring_to_json(const PartialCyclicColouring& c) {
  std::string s;
  s.reserve(c.colours.size());
  for (const auto col : c.colours)
    s.push_back(col == PointColour::Red ? 'R' : col == PointColour::Blue ? 'B' : 'U');
  return Json{{"p", c.p}, {"colours", std::move(s)}, {"meta", meta_to_json(c.meta)}};
}

std::string colouring_to_text(const CyclicColouring& c) {
  std::string out = std::to_string(c.p);
  out.push_back('\n');
  for (const auto col : c.colours) out.push_back(col == Colour::Red ? 'R' : 'B');
  out.push_back('\n');
  return out;
}

std::string colouring_to_text(const PartialCyclicColouring& c) {
  std::string out = std::to_string(c.p);
  out.push_back('\n');
  for (const auto col : c.colours)
    out.push_back(col == PointColour::Red ? 'R' : col == PointColour::Blue ? 'B' : 'U');
  out.push_back('\n');
  return out;
}

PartialCyclicColouring parse_colouring_text(const std::string& text) {
  std::istringstream in(text);
  std::string first, second;
  if (!std::getline(in, first) || !std::getline(in, second))
    throw InvalidParameter("colouring text: expected two lines (modulus, colours)");
  long p = 0;
  try {
    std::size_t pos = 0;
    p = std::stol(first, &pos);
    if (pos != first.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidParameter("colouring text: bad modulus line '" + first + "'");
  }
  if (p < 2) throw InvalidParameter("colouring text: modulus must be >= 2");
  if (second.size() != static_cast<std::size_t>(p))
    throw InvalidParameter("colouring text: expected " + std::to_string(p) + " colour characters, got " +
                           std::to_string(second.size()));
  PartialCyclicColouring out;
  out.p = p;
  out.meta.source = "external";
  out.colours.reserve(second.size());
  for (const char ch : second) {
    switch (ch) {
      case 'R': out.colours.push_back(PointColour::Red); break;
      case 'B': out.colours.push_back(PointColour::Blue); break;
      case 'U':
        out.colours.push_back(PointColour::Unresolved);
        ++out.meta.unresolved_count;
        break;
      default:
        throw InvalidParameter(std::string("colouring text: unexpected character '") + ch + "'");
    }
  }
  return out;
}

CyclicColouring as_total(const PartialCyclicColouring& partial) {
  CyclicColouring out;
  out.p = partial.p;
  out.meta = partial.meta;
  out.colours.reserve(partial.colours.size());
  for (const auto c : partial.colours) {
    if (c == PointColour::Unresolved)
      throw InvalidParameter("as_total: colouring has unresolved cells");
    out.colours.push_back(c == PointColour::Red ? Colour::Red : Colour::Blue);
  }
  return out;
}

}  // namespace aplab
