#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chronoscale/error.hpp"
#include "chronoscale/fractional.hpp"
#include "chronoscale/rational.hpp"
#include "chronoscale/signal.hpp"

namespace chronoscale::io {

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double x);

/// {"instants": [...], "t0_index": n}. Throws ParseError on malformed input
/// and the TimeScale errors on invalid content.
TimeScale parse_scale(const std::string& json_text);
TimeScale load_scale(const std::string& path);
std::string scale_to_json(const TimeScale& ts);

/// CSV with header `t,re,im` and one row per instant of `ts`. Instants must
/// agree with the scale to 12 significant digits (ScaleMismatch otherwise).
/// The support is the hull of the nonzero samples.
Signal parse_signal(const std::string& csv_text, ScalePtr ts);
Signal load_signal(const std::string& path, ScalePtr ts);
void write_signal(std::ostream& os, const Signal& f);

/// {"num": [...], "den": [...], "poles": [{"re", "im", "mult", "roc"}]}.
/// Coefficients are numbers or [re, im] pairs. a_N must be 1 and the poles,
/// when given, must reproduce the denominator to 1e-10. Without "poles" the
/// roots of the denominator are used, untagged. A pole without "roc" is
/// untagged.
RationalTransform parse_rational(const std::string& json_text);
RationalTransform load_rational(const std::string& path);

/// {"a": [...], "b": [...]} in ascending derivative order.
struct SystemSpec {
  std::vector<complex> a;
  std::vector<complex> b;
};
SystemSpec parse_system(const std::string& json_text);
SystemSpec load_system(const std::string& path);

/// `# alpha=..., method=...` followed by the signal CSV layout.
void write_kernel(std::ostream& os, const FractionalKernel& kernel);

std::string read_file(const std::string& path);

/// Complex sample grid. Either comma-separated tokens such as `1`, `0.5+2j`,
/// `-3j`, or a range `re0:re1:count,im` with `count` real parts spaced
/// linearly (prefix `log:` for geometric spacing) at a fixed imaginary part.
/// Throws ParseError.
std::vector<complex> parse_s_grid(const std::string& spec);

/// Process exit status for a library error: 2 input, 3 numeric precondition,
/// 4 contour or region of convergence, 5 scale mismatch.
int exit_code(ErrorCode code) noexcept;

}  // namespace chronoscale::io
