#include "ciia/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

#include <json.hpp>

namespace ciia {

using nlohmann::json;

void set_communities(AlgoReport& report, const Graph& g) {
  report.communities.clear();
  for (const auto& group : report.partition.groups()) {
    auto& labels = report.communities.emplace_back();
    labels.reserve(group.size());
    for (NodeId u : group) labels.push_back(g.label(u));
  }
  report.community_count = report.communities.size();
}

std::string report_to_json(const AlgoReport& r, int indent) {
  json doc = json::object();
  doc["tool"] = "ciia";
  doc["version"] = r.version;
  doc["algorithm"] = r.algorithm;
  doc["input"] = r.input;
  doc["nodes"] = r.nodes;
  doc["edges"] = r.edges;
  doc["modularity"] = r.modularity;
  doc["community_count"] = r.community_count;
  doc["communities"] = r.communities;
  doc["iterations"] = r.iterations;
  doc["converged"] = r.converged;
  doc["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  doc["time_ms"] = r.time_ms;
  return doc.dump(indent) + "\n";
}

AlgoReport report_from_json(const std::string& text) {
  AlgoReport r;
  try {
    const json doc = json::parse(text);
    r.version = doc.at("version").get<std::string>();
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.input = doc.at("input").get<std::string>();
    r.nodes = doc.at("nodes").get<std::size_t>();
    r.edges = doc.at("edges").get<std::size_t>();
    r.modularity = doc.at("modularity").get<double>();
    r.community_count = doc.at("community_count").get<std::size_t>();
    r.communities = doc.at("communities").get<std::vector<std::vector<std::string>>>();
    r.iterations = doc.at("iterations").get<std::size_t>();
    r.converged = doc.at("converged").get<bool>();
    if (!doc.at("seed").is_null()) r.seed = doc.at("seed").get<std::uint64_t>();
    r.time_ms = doc.at("time_ms").get<double>();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

double report_modularity(const Graph& g, const AlgoReport& report) {
  const std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> assignment(g.node_count(), unset);
  for (std::uint32_t c = 0; c < report.communities.size(); ++c) {
    for (const auto& label : report.communities[c]) {
      const NodeId u = g.id_of(label);
      if (assignment[u] != unset) throw Error("label '" + label + "' appears in two communities");
      assignment[u] = c;
    }
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (assignment[u] == unset) throw Error("label '" + g.label(u) + "' is not in any community");
  }
  return modularity(g, Partition::from_assignment(g, assignment));
}

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.algo << ',' << r.seed << ','
        << format_real(r.modularity) << ',' << format_real(r.time_ms) << ',' << r.iterations << '\n';
  }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
  }
}

}  // namespace ciia
