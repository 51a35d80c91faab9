#include "nuframe/io.hpp"

#include <cstdio>
#include <sstream>

#include "nuframe/errors.hpp"

namespace nuframe {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw DataError(line, "not a number: '" + t + "'");
  }
  if (used != t.size()) throw DataError(line, "not a number: '" + t + "'");
  return v;
}

long long parse_int(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw DataError(line, "not an integer: '" + t + "'");
  }
  if (used != t.size()) throw DataError(line, "not an integer: '" + t + "'");
  return v;
}

// "# a=1 b=2" -> {a: 1, b: 2}; values may be empty.
std::map<std::string, std::string> parse_header(const std::string& text, std::size_t line) {
  std::string s = trim(text);
  if (s.empty() || s[0] != '#') throw DataError(line, "expected a '#' header line");
  std::istringstream words(s.substr(1));
  std::map<std::string, std::string> out;
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw DataError(line, "header field without '=': " + word);
    out[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return out;
}

const std::string& header_field(const std::map<std::string, std::string>& h, const std::string& key,
                                std::size_t line) {
  const auto it = h.find(key);
  if (it == h.end()) throw DataError(line, "header is missing '" + key + "'");
  return it->second;
}

std::string format_modulus(const std::vector<int>& modulus) {
  std::string out;
  for (std::size_t i = 0; i < modulus.size(); ++i) out += (i ? ";" : "") + std::to_string(modulus[i]);
  return out;
}

std::vector<int> parse_modulus(const std::string& text, std::size_t line) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) out.push_back(static_cast<int>(parse_int(part, line)));
  return out;
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream parts(row);
  std::string part;
  while (std::getline(parts, part, ',')) out.push_back(part);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_digits(const FieldElement& x) {
  if (x.is_zero()) return "0:";
  std::string out = std::to_string(x.valuation()) + ":";
  bool first = true;
  for (auto d : x.coefficients()) {
    out += (first ? "" : " ") + std::to_string(d);
    first = false;
  }
  return out;
}

FieldElement parse_digits(const std::string& text, const LocalField& field, std::size_t line) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) throw DataError(line, "representative needs '<exponent>:<digits>'");
  const int lo = static_cast<int>(parse_int(t.substr(0, colon), line));
  std::istringstream words(t.substr(colon + 1));
  std::vector<std::uint32_t> coeffs;
  std::string word;
  while (words >> word) {
    const long long d = parse_int(word, line);
    if (d < 0 || d >= static_cast<long long>(field.q())) throw DataError(line, "digit " + word + " outside GF(q)");
    coeffs.push_back(static_cast<std::uint32_t>(d));
  }
  return FieldElement::from_coefficients(lo, std::move(coeffs));
}

void write_step_csv(std::ostream& out, const StepFunction& f) {
  const auto& cfg = f.field().config();
  out << "# resolution=" << f.resolution() << " p=" << cfg.p << " c=" << cfg.c
      << " modulus=" << format_modulus(cfg.modulus) << "\n";
  out << "rep_digits,re,im\n";
  for (const auto& [h, v] : f.cells())
    out << format_digits(h) << "," << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
}

FieldConfig read_step_csv_field(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(1, "empty input");
  const auto h = parse_header(line, 1);
  FieldConfig cfg;
  cfg.p = static_cast<int>(parse_int(header_field(h, "p", 1), 1));
  cfg.c = static_cast<int>(parse_int(header_field(h, "c", 1), 1));
  const auto it = h.find("modulus");
  if (it != h.end()) cfg.modulus = parse_modulus(it->second, 1);
  return cfg;
}

StepFunction read_step_csv(std::istream& in, std::shared_ptr<const LocalField> field) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(1, "empty input");
  const auto h = parse_header(line, 1);
  const int resolution = static_cast<int>(parse_int(header_field(h, "resolution", 1), 1));
  const auto& cfg = field->config();
  if (parse_int(header_field(h, "p", 1), 1) != cfg.p || parse_int(header_field(h, "c", 1), 1) != cfg.c)
    throw DataError(1, "dump was written for a different field");

  if (!std::getline(in, line) || trim(line) != "rep_digits,re,im") throw DataError(2, "expected column header 'rep_digits,re,im'");

  StepFunction f(field, resolution);
  std::size_t n = 2;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    const auto cols = split_csv(line);
    if (cols.size() != 3) throw DataError(n, "expected 3 columns, found " + std::to_string(cols.size()));
    const FieldElement rep = parse_digits(cols[0], *field, n);
    if (rep.below(resolution) != rep) throw DataError(n, "representative has digits at or above the resolution");
    f.set(rep, Complex{parse_double(cols[1], n), parse_double(cols[2], n)});
  }
  return f;
}

void write_mask_file(std::ostream& out, const SystemConfig& sys) {
  const auto& cfg = sys.field->config();
  out << "# p=" << cfg.p << " c=" << cfg.c << " N=" << sys.N << " r=" << sys.r << " nu=" << sys.nu.index()
      << " normalization=" << to_string(sys.normalization) << "\n";
  for (std::size_t k = 0; k < sys.masks.size(); ++k) {
    out << "mask " << k << "\n";
    for (const auto& [idx, a] : sys.masks[k].coeffs)
      out << idx.n << " " << (idx.delta ? 1 : 0) << " " << format_double(a.real()) << " " << format_double(a.imag())
          << "\n";
  }
}

MaskFile read_mask_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError(1, "empty mask file");
  const auto h = parse_header(line, 1);
  MaskFile out;
  out.p = static_cast<int>(parse_int(header_field(h, "p", 1), 1));
  out.c = static_cast<int>(parse_int(header_field(h, "c", 1), 1));
  out.N = static_cast<int>(parse_int(header_field(h, "N", 1), 1));
  out.r = static_cast<int>(parse_int(header_field(h, "r", 1), 1));
  const long long nu = parse_int(header_field(h, "nu", 1), 1);
  if (nu <= 0) throw DataError(1, "nu must be a nonzero GF(q) index");
  out.nu = static_cast<std::uint32_t>(nu);
  try {
    out.normalization = parse_normalization(header_field(h, "normalization", 1));
  } catch (const Error& e) {
    throw DataError(1, e.what());
  }

  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream words(t);
    std::vector<std::string> w;
    std::string word;
    while (words >> word) w.push_back(word);
    if (w[0] == "mask") {
      if (w.size() != 2) throw DataError(n, "expected 'mask <k>'");
      if (parse_int(w[1], n) != static_cast<long long>(out.masks.size()))
        throw DataError(n, "masks must be numbered 0, 1, 2, ... in order");
      out.masks.emplace_back();
      continue;
    }
    if (out.masks.empty()) throw DataError(n, "coefficient row before the first 'mask' line");
    if (w.size() != 4) throw DataError(n, "expected 'n delta re im'");
    const long long idx_n = parse_int(w[0], n);
    const long long delta = parse_int(w[1], n);
    if (idx_n < 0) throw DataError(n, "translation index must be non-negative");
    if (delta != 0 && delta != 1) throw DataError(n, "delta must be 0 or 1");
    const LambdaIndex idx{static_cast<std::uint64_t>(idx_n), delta == 1};
    auto& mask = out.masks.back();
    if (mask.contains(idx)) throw DataError(n, "duplicate coefficient");
    mask[idx] = Complex{parse_double(w[2], n), parse_double(w[3], n)};
  }
  if (out.masks.empty()) throw DataError(n, "mask file lists no masks");
  return out;
}

}  // namespace nuframe
