#include "report_json.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace cli {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) return {};
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

nlohmann::json to_json(const Outcome& o, const Caps& caps, const std::string& status, double wall_ms) {
  using nlohmann::json;
  json inputs = json::array();
  for (const auto& in : o.inputs)
    inputs.push_back({{"name", in.name}, {"kind", in.kind}, {"file", in.origin}, {"sha256", sha256_file(in.origin)}});
  json counts = json::object();
  for (const auto& [k, v] : o.counts) counts[k] = v;
  counts["checks"] = o.report.checked();
  counts["violations_total"] = o.report.total();
  json violations = json::array();
  for (const auto& v : o.report.violations())
    violations.push_back({{"tag", v.tag}, {"cells", v.cells}, {"detail", v.detail}});
  json c = {{"budget", caps.budget}, {"jobs", caps.jobs}};
  c["max_group"] = caps.max_group > 0 ? json(caps.max_group) : json("default");
  c["max_hom1"] = caps.max_hom1 > 0 ? json(caps.max_hom1) : json("default");
  return {{"command", o.command}, {"inputs", inputs},         {"caps", c},
          {"status", status},     {"counts", counts},         {"violations", violations},
          {"wall_time_ms", wall_ms}};
}

std::string to_text(const nlohmann::json& r) {
  std::string out = fmt::format("{}: {}\n", r["command"].get<std::string>(), r["status"].get<std::string>());
  for (const auto& in : r["inputs"])
    out += fmt::format("  input {} ({}) {}\n", in["name"].get<std::string>(), in["kind"].get<std::string>(),
                       in["file"].get<std::string>());
  for (const auto& [k, v] : r["counts"].items()) out += fmt::format("  {} = {}\n", k, v.dump());
  for (const auto& v : r["violations"])
    out += fmt::format("  violation {} {} {}\n", v["tag"].get<std::string>(), v["cells"].dump(),
                       v["detail"].get<std::string>());
  out += fmt::format("  wall_time_ms = {:.1f}\n", r["wall_time_ms"].get<double>());
  return out;
}

}  // namespace cli
