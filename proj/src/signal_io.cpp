#include "qsp/signal_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qsp {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, std::size_t row) {
  double value = 0.0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw csv_error("row " + std::to_string(row) + ": bad number '" + s + "'");
  return value;
}

long long parse_index(const std::string& s, std::size_t row) {
  long long value = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw csv_error("row " + std::to_string(row) + ": bad index '" + s + "'");
  return value;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

SignalFile parse_signal_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "n,r,i,j,k")
    throw csv_error("missing or malformed header; expected 'n,r,i,j,k'");
  SignalFile out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5)
      throw csv_error("row " + std::to_string(row) + ": expected 5 columns");
    const long long n = parse_index(fields[0], row);
    if (!out.index.empty() && n <= out.index.back())
      throw csv_error("row " + std::to_string(row) + ": index not strictly increasing");
    out.index.push_back(n);
    out.samples.push_back({parse_double(fields[1], row), parse_double(fields[2], row),
                           parse_double(fields[3], row), parse_double(fields[4], row)});
    ++row;
  }
  if (out.samples.empty()) throw csv_error("no samples");
  return out;
}

SignalFile load_signal_csv(const std::string& path) {
  return parse_signal_csv(read_text_file(path));
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string serialise_signal_csv(const SignalFile& s) {
  std::string out = "n,r,i,j,k\n";
  for (std::size_t t = 0; t < s.samples.size(); ++t) {
    const Quaternion& q = s.samples[t];
    out += std::to_string(s.index[t]);
    out += ',';
    out += format_double(q.r);
    out += ',';
    out += format_double(q.i);
    out += ',';
    out += format_double(q.j);
    out += ',';
    out += format_double(q.k);
    out += '\n';
  }
  return out;
}

void save_signal_csv(const std::string& path, const SignalFile& s) {
  write_text_file(path, serialise_signal_csv(s));
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

std::string file_digest(const std::vector<std::string>& paths) {
  std::string all;
  for (const std::string& p : paths) {
    all += read_text_file(p);
    all += '\0';
  }
  return fnv1a_digest(all);
}

Json to_json(const Quaternion& q) { return Json::array({q.r, q.i, q.j, q.k}); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const Quaternion& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json make_report(const std::string& command, Json parameters, Json results,
                 Json residuals, const std::string& input_digest) {
  Json report;
  report["command"] = command;
  report["parameters"] = std::move(parameters);
  report["results"] = std::move(results);
  report["residuals"] = std::move(residuals);
  report["provenance"] = {{"input_digest", input_digest},
                          {"library_version", kLibraryVersion}};
  return report;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw csv_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qsp
