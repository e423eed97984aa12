#include "degseq/report.hpp"

#include <sstream>

#include "json.hpp"

namespace degseq {

namespace {

using json = nlohmann::ordered_json;

json family_json(const FamilyMatch& m) {
  json out;
  out["family"] = std::string(family_name(m.family));
  out["n"] = m.n;
  if (m.i) out["i"] = *m.i;
  if (m.j) out["j"] = *m.j;
  if (m.k) out["k"] = *m.k;
  if (m.t) out["t"] = *m.t;
  if (m.family == ExceptionFamily::s1) out["branch"] = m.odd_branch ? "odd" : "even";
  return out;
}

json sequence_list(const std::vector<DegreeSequence>& seqs) {
  json out = json::array();
  for (const DegreeSequence& s : seqs) out.push_back(s.to_string());
  return out;
}

std::string family_text(const FamilyMatch& m) {
  std::ostringstream os;
  os << family_name(m.family) << " (n=" << m.n;
  if (m.i) os << ", i=" << *m.i;
  if (m.j) os << ", j=" << *m.j;
  if (m.k) os << ", k=" << *m.k;
  if (m.t) os << ", t=" << *m.t;
  if (m.family == ExceptionFamily::s1) os << ", " << (m.odd_branch ? "odd" : "even") << " branch";
  os << ")";
  return os.str();
}

}  // namespace

std::string verdict_json(const Verdict& v) {
  json out;
  out["version"] = kSchemaVersion;
  out["source"] = v.source == VerdictSource::oracle ? "oracle" : "characterization";
  out["pattern"] = std::string(pattern_name(v.pattern));
  out["sequence"] = v.sequence.to_string();
  out["decision"] = v.decision;
  out["failed_conditions"] = v.failed_conditions;
  out["exception"] = v.exception ? family_json(*v.exception) : json(nullptr);
  return out.dump();
}

Verdict oracle_verdict(PatternId pattern, const DegreeSequence& seq, bool potentially) {
  Verdict v;
  v.pattern = pattern;
  v.sequence = seq;
  v.decision = potentially;
  v.source = VerdictSource::oracle;
  return v;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.source == VerdictSource::oracle ? "oracle" : "characterization") << ": "
     << v.sequence.to_string() << " is " << (v.decision ? "potentially" : "not potentially") << " "
     << pattern_name(v.pattern) << "-graphic\n";
  for (const std::string& c : v.failed_conditions) os << "  failed: " << c << "\n";
  if (v.exception) {
    if (v.exception->family == ExceptionFamily::listed) {
      os << "  exception: listed sequence " << v.sequence.to_string() << "\n";
    } else {
      os << "  exception: " << family_text(*v.exception) << "\n";
    }
  }
  return os.str();
}

std::string report_json(const MismatchReport& r, std::optional<long> elapsed_ms) {
  json out;
  out["version"] = kSchemaVersion;
  out["pattern"] = std::string(pattern_name(r.pattern));
  out["n_lo"] = r.n_lo;
  out["n_hi"] = r.n_hi;
  out["checked"] = r.sequences_checked;
  json per_n = json::object();
  for (std::size_t i = 0; i < r.sequences_per_n.size(); ++i) {
    per_n[std::to_string(r.n_lo + static_cast<int>(i))] = r.sequences_per_n[i];
  }
  out["checked_per_n"] = per_n;
  json mismatches = json::array();
  for (const Mismatch& m : r.mismatches) {
    json entry;
    entry["sequence"] = m.sequence.to_string();
    entry["characterization"] = m.characterization;
    entry["oracle"] = m.oracle;
    mismatches.push_back(entry);
  }
  out["mismatches"] = mismatches;
  out["budget_failures"] = sequence_list(r.budget_failures);
  out["verified"] = r.verified();
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out.dump(2) + "\n";
}

std::string report_text(const MismatchReport& r) {
  std::ostringstream os;
  os << "pattern " << pattern_name(r.pattern) << ", n = " << r.n_lo << ".." << r.n_hi << "\n";
  for (std::size_t i = 0; i < r.sequences_per_n.size(); ++i) {
    os << "  n=" << r.n_lo + static_cast<int>(i) << ": " << r.sequences_per_n[i]
       << " sequences\n";
  }
  os << "checked " << r.sequences_checked << " sequences, " << r.mismatches.size()
     << " mismatches, " << r.budget_failures.size() << " budget failures\n";
  for (const Mismatch& m : r.mismatches) {
    os << "  MISMATCH " << m.sequence.to_string() << ": characterization "
       << (m.characterization ? "yes" : "no") << ", oracle " << (m.oracle ? "yes" : "no") << "\n";
  }
  for (const DegreeSequence& s : r.budget_failures) {
    os << "  BUDGET " << s.to_string() << "\n";
  }
  return os.str();
}

std::string report_json(const SigmaResult& r, std::optional<long> elapsed_ms) {
  json out;
  out["version"] = kSchemaVersion;
  out["pattern"] = std::string(pattern_name(r.pattern));
  out["n"] = r.n;
  out["empirical"] = r.empirical;
  out["formula"] = r.formula ? json(*r.formula) : json(nullptr);
  out["match"] = r.matches_formula();
  out["failing_level"] = r.failing_level ? json(*r.failing_level) : json(nullptr);
  out["failing_count"] = r.failing_count;
  out["witnesses"] = sequence_list(r.exceptional_sequences);
  out["checked"] = r.sequences_checked;
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out.dump(2) + "\n";
}

std::string report_text(const SigmaResult& r) {
  std::ostringstream os;
  os << "pattern " << pattern_name(r.pattern) << ", n = " << r.n << "\n";
  os << "  empirical sigma: " << r.empirical << "\n";
  os << "  formula sigma:   ";
  if (r.formula) {
    os << *r.formula << (r.matches_formula() ? " (match)" : " (MISMATCH)") << "\n";
  } else {
    os << "n/a\n";
  }
  if (r.failing_level) {
    os << "  failing at sum " << *r.failing_level << ": " << r.failing_count << " sequence(s)\n";
    for (const DegreeSequence& s : r.exceptional_sequences) os << "    " << s.to_string() << "\n";
  }
  os << "  checked " << r.sequences_checked << " sequences\n";
  return os.str();
}

std::string witness_json(PatternId pattern, const DegreeSequence& seq, const Witness& w) {
  json out;
  out["version"] = kSchemaVersion;
  out["pattern"] = std::string(pattern_name(pattern));
  out["sequence"] = seq.to_string();
  json edges = json::array();
  for (const Edge& e : w.graph.edges()) edges.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  out["edges"] = edges;
  out["embedding"] = w.embedding;
  return out.dump(2) + "\n";
}

}  // namespace degseq
