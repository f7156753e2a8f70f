#pragma once

// Batch command-line front end. Records go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 mathematical failure (not a solution, positivity
// violated, point outside the region), 2 usage error, 3 budget exhausted.

#include "sumprod/transforms.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sumprod::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2, kBudget = 3 };

enum class Format { Jsonl, Tsv };

struct OutputRecord {
    DioSolution solution;
    std::string source;  // verify | gen4 | family | search | s3
};

/// {"s":S,"parts":[...],"n":N,"b":B,"source":"..."}; integers are written
/// as unbounded decimal literals.
std::string to_jsonl(const OutputRecord& rec);
/// a_1 ... a_{s-1} b n, tab separated.
std::string to_tsv(const OutputRecord& rec);
void write_record(std::ostream& out, const OutputRecord& rec, Format fmt);

/// Parses "p/q,p/q" into a point.
CurvePoint parse_point(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli
