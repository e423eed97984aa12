#pragma once

#include <optional>
#include <string>

#include "degseq/characterize.hpp"
#include "degseq/extremal.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

inline constexpr const char* kSchemaVersion = "v1";

/// One-line JSON record:
/// {"version","source","pattern","sequence","decision","failed_conditions",
///  "exception"} where exception is null or {"family", "n", "i"?, "j"?,
///  "k"?, "t"?, "branch"?}.
std::string verdict_json(const Verdict& verdict);

/// Verdict record for an oracle answer. Budget exhaustion has no verdict;
/// callers report it separately.
Verdict oracle_verdict(PatternId pattern, const DegreeSequence& seq, bool potentially);

std::string verdict_text(const Verdict& verdict);

/// Pretty-printed report documents (2-space indent, trailing newline).
/// `elapsed_ms` is only emitted when given, so default output is
/// byte-stable across runs and worker counts.
std::string report_json(const MismatchReport& report, std::optional<long> elapsed_ms = {});
std::string report_text(const MismatchReport& report);

std::string report_json(const SigmaResult& result, std::optional<long> elapsed_ms = {});
std::string report_text(const SigmaResult& result);

/// Witness rendering: {"version","pattern","sequence","edges":["u-v",...],
/// "embedding":[...]}.
std::string witness_json(PatternId pattern, const DegreeSequence& seq, const Witness& witness);

}  // namespace degseq
