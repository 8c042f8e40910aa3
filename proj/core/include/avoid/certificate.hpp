#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoid/exponents.hpp"
#include "avoid/verifiers.hpp"

namespace avoid {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "avoid 0.1.0";
// Sets above this many elements go to a sidecar set file.
inline constexpr std::size_t kInlineElementLimit = 10'000;

// JSON certificate written by every CLI command.
struct CertificateFile {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::string spec;
  std::optional<std::vector<std::int64_t>> elements;
  std::optional<std::string> set_path;
  std::optional<std::int64_t> size;
  std::optional<AvoidanceCertificate> verdict;
  std::map<std::string, std::string> results;
  std::vector<ReportRow> exponents;
  std::map<std::string, double> timings;  // seconds
  std::string tool_version = kToolVersion;

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

std::string serialize(const CertificateFile& certificate);
CertificateFile parse_certificate(std::string_view json);

// Set files: one "# <header>" line, then one decimal element per line.
struct SetFile {
  std::string header;
  std::optional<std::int64_t> N;  // from an "N=<n>" token in the header
  std::vector<std::int64_t> elements;
};

void write_set_file(std::ostream& out, const std::string& header, std::span<const std::int64_t> elements);
// Elements come back sorted and deduplicated; errors are Errc::parse_error.
SetFile read_set_file(std::istream& in);

}  // namespace avoid
