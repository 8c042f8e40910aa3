#include "avoid/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "avoid/error.hpp"

namespace avoid {

using nlohmann::json;

std::string serialize(const CertificateFile& c) {
  json j;
  j["schemaVersion"] = c.schema_version;
  j["command"] = c.command;
  j["spec"] = c.spec;
  if (c.elements) j["elements"] = *c.elements;
  if (c.set_path) j["setPath"] = *c.set_path;
  if (c.size) j["size"] = *c.size;
  if (c.verdict) {
    const auto& v = *c.verdict;
    j["verdict"] = {{"kind", std::string(to_string(v.verdict))},
                    {"method", v.method},
                    {"setDigest", v.set_digest},
                    {"N", v.N},
                    {"witness", v.witness},
                    {"checked", v.checked},
                    {"elapsedMicros", v.elapsed.count()}};
  }
  j["results"] = c.results;
  j["exponents"] = json::array();
  for (const auto& row : c.exponents) {
    j["exponents"].push_back({{"label", row.label},
                              {"value", row.value ? json(*row.value) : json(nullptr)},
                              {"note", row.note}});
  }
  j["timings"] = c.timings;
  j["toolVersion"] = c.tool_version;
  return j.dump(2);
}

CertificateFile parse_certificate(std::string_view text) {
  try {
    const auto j = json::parse(text);
    CertificateFile c;
    c.schema_version = j.at("schemaVersion").get<std::string>();
    if (c.schema_version != kSchemaVersion) {
      throw Error(Errc::parse_error, "unsupported schemaVersion '" + c.schema_version + "'");
    }
    c.command = j.at("command").get<std::string>();
    c.spec = j.at("spec").get<std::string>();
    if (j.contains("elements")) c.elements = j["elements"].get<std::vector<std::int64_t>>();
    if (j.contains("setPath")) c.set_path = j["setPath"].get<std::string>();
    if (j.contains("size")) c.size = j["size"].get<std::int64_t>();
    if (j.contains("verdict")) {
      const auto& v = j["verdict"];
      AvoidanceCertificate a;
      a.verdict = parse_verdict(v.at("kind").get<std::string>());
      a.method = v.at("method").get<std::string>();
      a.set_digest = v.at("setDigest").get<std::string>();
      a.N = v.at("N").get<std::int64_t>();
      a.witness = v.at("witness").get<std::vector<std::int64_t>>();
      a.checked = v.at("checked").get<std::uint64_t>();
      a.elapsed = std::chrono::microseconds(v.at("elapsedMicros").get<std::int64_t>());
      c.verdict = std::move(a);
    }
    c.results = j.at("results").get<std::map<std::string, std::string>>();
    for (const auto& row : j.at("exponents")) {
      ReportRow r;
      r.label = row.at("label").get<std::string>();
      if (!row.at("value").is_null()) r.value = row["value"].get<double>();
      r.note = row.at("note").get<std::string>();
      c.exponents.push_back(std::move(r));
    }
    c.timings = j.at("timings").get<std::map<std::string, double>>();
    c.tool_version = j.at("toolVersion").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("certificate: ") + e.what());
  }
}

void write_set_file(std::ostream& out, const std::string& header, std::span<const std::int64_t> elements) {
  out << "# " << header << '\n';
  for (const auto e : elements) out << e << '\n';
}

SetFile read_set_file(std::istream& in) {
  SetFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (file.header.empty()) {
        file.header = line.substr(line.find_first_not_of("# ") == std::string::npos ? line.size()
                                                                                      : line.find_first_not_of("# "));
      }
      continue;
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw Error(Errc::parse_error, "set file line " + std::to_string(line_no) + ": '" + line + "'");
    }
    file.elements.push_back(value);
  }
  std::istringstream tokens(file.header);
  std::string token;
  while (tokens >> token) {
    if (token.starts_with("N=")) {
      std::int64_t n = 0;
      const auto [ptr, ec] = std::from_chars(token.data() + 2, token.data() + token.size(), n);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(Errc::parse_error, "bad N token '" + token + "'");
      }
      file.N = n;
    }
  }
  std::sort(file.elements.begin(), file.elements.end());
  file.elements.erase(std::unique(file.elements.begin(), file.elements.end()), file.elements.end());
  return file;
}

}  // namespace avoid
