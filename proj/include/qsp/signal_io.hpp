#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsp/qmatrix.hpp"

namespace qsp {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Malformed signal CSV.
class csv_error : public std::runtime_error {
 public:
  explicit csv_error(const std::string& what) : std::runtime_error(what) {}
};

/// Signal file: header "n,r,i,j,k", one sample per row, n strictly
/// increasing integers. Values round-trip exactly through shortest-form
/// decimal text.
struct SignalFile {
  std::vector<long long> index;
  QVector samples;
};

SignalFile parse_signal_csv(const std::string& text);
SignalFile load_signal_csv(const std::string& path);
std::string serialise_signal_csv(const SignalFile& s);
void save_signal_csv(const std::string& path, const SignalFile& s);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double x);

/// FNV-1a 64-bit digest, as "fnv1a:<hex>".
std::string fnv1a_digest(const std::string& bytes);
std::string file_digest(const std::vector<std::string>& paths);

using Json = nlohmann::ordered_json;

Json to_json(const Quaternion& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);

/// Report written by every CLI command: command name, parameters, results,
/// residuals, and provenance (input digest + library version). Deterministic
/// byte-for-byte for identical inputs.
Json make_report(const std::string& command, Json parameters, Json results,
                 Json residuals, const std::string& input_digest);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace qsp
