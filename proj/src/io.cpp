#include "chronoscale/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "chronoscale/error.hpp"
#include "json.hpp"

namespace chronoscale::io {

namespace {

using nlohmann::json;

constexpr double kPoleMismatch = 1e-10;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(ErrorCode::ParseError, what + " must be a number");
  return j.get<double>();
}

complex as_complex(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return {as_number(j[0], what), as_number(j[1], what)};
  throw Error(ErrorCode::ParseError, what + " must be a number or an [re, im] pair");
}

std::vector<complex> coefficient_list(const json& obj, const char* key, bool required) {
  if (!obj.contains(key)) {
    if (required) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
    return {};
  }
  const json& arr = obj.at(key);
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string(key) + " must be an array");
  std::vector<complex> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_complex(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Roc parse_roc(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "roc must be a string");
  const std::string s = j.get<std::string>();
  if (s == "causal") return Roc::causal;
  if (s == "anticausal") return Roc::anticausal;
  throw Error(ErrorCode::ParseError, "roc must be \"causal\" or \"anticausal\", got \"" + s + "\"");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, std::size_t line) {
  const std::string t = trim(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": \"" + t + "\" is not a number");
  }
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TimeScale parse_scale(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("instants") || !j.contains("t0_index")) {
    throw Error(ErrorCode::ParseError, "time scale needs \"instants\" and \"t0_index\"");
  }
  const json& arr = j.at("instants");
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "instants must be an array");
  std::vector<double> instants;
  for (const json& v : arr) instants.push_back(as_number(v, "instant"));
  const json& idx = j.at("t0_index");
  if (!idx.is_number_integer() || idx.get<long long>() < 0) {
    throw Error(ErrorCode::ParseError, "t0_index must be a non-negative integer");
  }
  return TimeScale(std::move(instants), idx.get<std::size_t>());
}

TimeScale load_scale(const std::string& path) { return parse_scale(read_file(path)); }

std::string scale_to_json(const TimeScale& ts) {
  std::string out = "{\"instants\": [";
  for (std::size_t n = 0; n < ts.size(); ++n) {
    if (n > 0) out += ", ";
    out += format_double(ts[n]);
  }
  out += "], \"t0_index\": " + std::to_string(ts.t0_index()) + "}\n";
  return out;
}

Signal parse_signal(const std::string& csv_text, ScalePtr ts) {
  std::istringstream in(csv_text);
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<complex> values;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header) {
      if (t != "t,re,im") {
        throw Error(ErrorCode::ParseError, "signal CSV header must be \"t,re,im\"");
      }
      header = true;
      continue;
    }
    const std::vector<std::string> cols = split(t, ',');
    if (cols.size() != 3) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 3 columns");
    }
    const double time = parse_double(cols[0], line_no);
    const std::size_t n = values.size();
    if (n >= ts->size() || !same_instant(time, (*ts)[n])) {
      throw Error(ErrorCode::ScaleMismatch, "line " + std::to_string(line_no) + ": instant " +
                                                trim(cols[0]) + " does not match the time scale");
    }
    values.emplace_back(parse_double(cols[1], line_no), parse_double(cols[2], line_no));
  }
  if (!header) throw Error(ErrorCode::ParseError, "signal CSV is empty");
  if (values.size() != ts->size()) {
    throw Error(ErrorCode::ScaleMismatch, "signal has " + std::to_string(values.size()) +
                                              " rows, time scale has " + std::to_string(ts->size()));
  }
  return Signal::from_values(std::move(ts), std::move(values));
}

Signal load_signal(const std::string& path, ScalePtr ts) {
  return parse_signal(read_file(path), std::move(ts));
}

void write_signal(std::ostream& os, const Signal& f) {
  os << "t,re,im\n";
  for (std::size_t n = 0; n < f.size(); ++n) {
    os << format_double(f.scale()[n]) << ',' << format_double(f[n].real()) << ','
       << format_double(f[n].imag()) << '\n';
  }
}

RationalTransform parse_rational(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "rational transform must be an object");
  RationalTransform h;
  h.num = coefficient_list(j, "num", true);
  h.den = coefficient_list(j, "den", true);
  const int n = h.den_degree();
  if (n < 1) throw Error(ErrorCode::DegenerateDenominator, "denominator must have degree >= 1");
  h.den.resize(static_cast<std::size_t>(n) + 1);
  if (std::abs(h.den.back() - 1.0) > 1e-15) {
    throw Error(ErrorCode::ParseError, "leading denominator coefficient must be 1");
  }

  if (j.contains("poles")) {
    const json& arr = j.at("poles");
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "poles must be an array");
    for (const json& p : arr) {
      if (!p.is_object() || !p.contains("re")) {
        throw Error(ErrorCode::ParseError, "each pole needs at least \"re\"");
      }
      Pole pole;
      pole.location = {as_number(p.at("re"), "pole re"),
                       p.contains("im") ? as_number(p.at("im"), "pole im") : 0.0};
      if (p.contains("mult")) {
        if (!p.at("mult").is_number_integer() || p.at("mult").get<int>() < 1) {
          throw Error(ErrorCode::ParseError, "pole mult must be a positive integer");
        }
        pole.multiplicity = p.at("mult").get<int>();
      }
      pole.roc = p.contains("roc") ? parse_roc(p.at("roc")) : Roc::untagged;
      h.poles.push_back(pole);
    }
    const double mismatch = pole_mismatch(h);
    if (mismatch > kPoleMismatch) {
      throw Error(ErrorCode::ParseError, "poles do not reproduce the denominator (mismatch " +
                                             format_double(mismatch) + ")");
    }
  } else {
    RationalTransform roots = transfer_function(h.den, h.num);
    for (Pole& p : roots.poles) p.roc = Roc::untagged;
    h.poles = std::move(roots.poles);
  }
  return h;
}

RationalTransform load_rational(const std::string& path) { return parse_rational(read_file(path)); }

SystemSpec parse_system(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "system must be an object");
  return {coefficient_list(j, "a", true), coefficient_list(j, "b", true)};
}

SystemSpec load_system(const std::string& path) { return parse_system(read_file(path)); }

void write_kernel(std::ostream& os, const FractionalKernel& kernel) {
  os << "# alpha=" << format_double(kernel.alpha) << ", method=" << kernel_method_name(kernel.method)
     << '\n';
  os << "t,re,im\n";
  for (std::size_t n = 0; n < kernel.weights.size(); ++n) {
    os << format_double((*kernel.scale)[n]) << ',' << format_double(kernel.weights[n].real()) << ','
       << format_double(kernel.weights[n].imag()) << '\n';
  }
}

namespace {

complex parse_complex_token(const std::string& raw) {
  const std::string tok = trim(raw);
  auto fail = [&]() -> complex {
    throw Error(ErrorCode::ParseError, "\"" + tok + "\" is not a complex number");
  };
  if (tok.empty()) return fail();
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != s.size()) fail();
    return v;
  };
  const char tail = tok.back();
  if (tail != 'j' && tail != 'i') return number(tok);
  const std::string body = tok.substr(0, tok.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return number(s);
  };
  if (split_at == std::string::npos) return {0.0, imag_part(body)};
  return {number(body.substr(0, split_at)), imag_part(body.substr(split_at))};
}

}  // namespace

std::vector<complex> parse_s_grid(const std::string& spec) {
  std::string s = trim(spec);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty s-grid");
  std::vector<complex> out;
  if (s.find(':') != std::string::npos) {
    bool geometric = false;
    if (s.rfind("log:", 0) == 0) {
      geometric = true;
      s = s.substr(4);
    }
    const std::vector<std::string> parts = split(s, ',');
    const std::vector<std::string> range = split(parts[0], ':');
    if (parts.size() > 2 || range.size() != 3) {
      throw Error(ErrorCode::ParseError, "range must look like re0:re1:count,im");
    }
    const double re0 = parse_double(range[0], 1);
    const double re1 = parse_double(range[1], 1);
    const double count_d = parse_double(range[2], 1);
    if (count_d < 1 || std::floor(count_d) != count_d) {
      throw Error(ErrorCode::ParseError, "range count must be a positive integer");
    }
    const double im = parts.size() == 2 ? parse_double(parts[1], 1) : 0.0;
    if (geometric && (re0 <= 0.0 || re1 <= 0.0)) {
      throw Error(ErrorCode::ParseError, "log range needs positive endpoints");
    }
    const auto count = static_cast<std::size_t>(count_d);
    for (std::size_t k = 0; k < count; ++k) {
      const double t = count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(count - 1);
      const double re = geometric ? re0 * std::pow(re1 / re0, t) : re0 + (re1 - re0) * t;
      out.emplace_back(re, im);
    }
    return out;
  }
  for (const std::string& tok : split(s, ',')) out.push_back(parse_complex_token(tok));
  return out;
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleHit:
    case ErrorCode::BoundaryIndex:
    case ErrorCode::WindowTooSmall:
    case ErrorCode::SupportTouchesBoundary:
    case ErrorCode::SingularStep:
    case ErrorCode::PoleOnScale:
    case ErrorCode::RepeatedGraininess:
    case ErrorCode::ReversedInterval:
      return 3;
    case ErrorCode::ContourInvalid:
    case ErrorCode::UntaggedPole:
    case ErrorCode::TargetOffSuperScale:
      return 4;
    case ErrorCode::ScaleMismatch:
    case ErrorCode::ReflectionOffGrid:
    case ErrorCode::NotShiftClosed:
      return 5;
    default:
      return 2;
  }
}

}  // namespace chronoscale::io
