// Copyright 2026 The cutcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cutcert/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cutcert/error.hpp"
#include "json.hpp"

namespace cutcert {

namespace {

constexpr char kMessageMagic[] = "CCPM";
constexpr std::uint8_t kMessageVersion = 1;
constexpr const char* kCertificateFormat = "cutcert-certificate";
constexpr int kCertificateVersion = 1;

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

std::uint64_t parse_number(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    parse_fail(line, "expected a non-negative integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    parse_fail(line, "integer out of range: " + token);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Stream files

void parse_stream(std::istream& in, const std::function<void(const StreamHeader&)>& on_header,
                  const std::function<void(const EdgeUpdate&)>& on_update) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<StreamHeader> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);

    if (!header) {
      if (tok.size() != 4 || tok[0] != "n" || tok[2] != "k")
        parse_fail(line_no, "expected header 'n <N> k <K>'");
      StreamHeader h{static_cast<std::size_t>(parse_number(tok[1], line_no)),
                     static_cast<std::size_t>(parse_number(tok[3], line_no))};
      if (h.n < 2) parse_fail(line_no, "n must be at least 2");
      if (h.k < 1 || h.k > h.n - 1) parse_fail(line_no, "k must lie in [1, n-1]");
      header = h;
      on_header(h);
      continue;
    }
    if (tok.size() != 3 || (tok[0] != "+" && tok[0] != "-"))
      parse_fail(line_no, "expected '+ u v' or '- u v'");
    const std::uint64_t u = parse_number(tok[1], line_no);
    const std::uint64_t v = parse_number(tok[2], line_no);
    if (u < 1 || v < 1 || u > header->n || v > header->n)
      parse_fail(line_no, "vertex outside [1, " + std::to_string(header->n) + "]");
    if (u == v) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " + tok[1]);
    on_update(EdgeUpdate{tok[0] == "+" ? +1 : -1, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read error");
  if (!header) parse_fail(line_no, "missing header 'n <N> k <K>'");
}

StreamData read_stream(std::istream& in) {
  StreamData data;
  parse_stream(
      in, [&](const StreamHeader& h) { data.header = h; },
      [&](const EdgeUpdate& u) { data.updates.push_back(u); });
  return data;
}

StreamData read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_stream(in);
}

void write_stream(std::ostream& out, const StreamData& data) {
  out << "n " << data.header.n << " k " << data.header.k << '\n';
  for (const auto& u : data.updates) out << (u.sign > 0 ? '+' : '-') << ' ' << u.u << ' ' << u.v << '\n';
}

ExactGraph replay(const StreamData& data, bool strict) {
  ExactGraph g(data.header.n, strict);
  for (const auto& u : data.updates) g.apply(u.u, u.v, u.sign);
  return g;
}

IngestResult ingest(std::istream& in, std::uint64_t seed, bool strict, const ConnConfig& config) {
  std::optional<ConnSketch> sketch;
  std::optional<ExactGraph> shadow;
  std::size_t count = 0;
  parse_stream(
      in,
      [&](const StreamHeader& h) {
        sketch.emplace(h.n, h.k, seed, config);
        if (strict) shadow.emplace(h.n, true);
      },
      [&](const EdgeUpdate& u) {
        if (shadow) shadow->apply(u.u, u.v, u.sign);
        sketch->apply(u.u, u.v, u.sign);
        ++count;
      });
  IngestResult result{std::move(*sketch), count, 0};
  for (std::size_t i = 0; i < result.sketch.instance_count(); ++i)
    result.sketch_bytes += result.sketch.instance(i).params().serialized_bytes();
  result.sketch_bytes += ConnSketch::kHeaderBytes;
  return result;
}

ConnSketch ingest(const StreamData& data, std::uint64_t seed, const ConnConfig& config) {
  ConnSketch sketch(data.header.n, data.header.k, seed, config);
  for (const auto& u : data.updates) sketch.apply(u.u, u.v, u.sign);
  return sketch;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return out;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "short write to " + path);
}

// ---------------------------------------------------------------------------
// Certificates

std::string certificate_to_json(const Certificate& cert) {
  using nlohmann::json;
  json j;
  j["format"] = kCertificateFormat;
  j["version"] = kCertificateVersion;
  j["kind"] = to_string(cert.kind);
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["seed"] = cert.seed;
  j["side"] = cert.side;
  json edges = json::array();
  for (const Edge& e : cert.edges) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["forest_edges"] = cert.forest_edges;
  json rounds = json::array();
  for (const auto& r : cert.rounds) {
    rounds.push_back({{"round", r.round},
                      {"threshold", r.threshold},
                      {"cuts", r.cuts},
                      {"edges_added", r.edges_added},
                      {"edges_total", r.edges_total}});
  }
  j["rounds"] = std::move(rounds);
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kCertificateFormat)
      throw Error(ErrorCode::ParseError, "not a certificate file");
    if (j.at("version").get<int>() != kCertificateVersion)
      throw Error(ErrorCode::ParseError, "unsupported certificate version");
    Certificate cert;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "positive")
      cert.kind = CertificateKind::Positive;
    else if (kind == "negative_cut")
      cert.kind = CertificateKind::NegativeCut;
    else if (kind == "negative_disconnected")
      cert.kind = CertificateKind::NegativeDisconnected;
    else
      throw Error(ErrorCode::ParseError, "unknown certificate kind '" + kind + "'");
    cert.n = j.at("n").get<std::size_t>();
    cert.k = j.at("k").get<std::size_t>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.side = j.at("side").get<VertexSet>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u, v]");
      cert.edges.push_back(Edge::make(e[0].get<Vertex>(), e[1].get<Vertex>()));
    }
    cert.forest_edges = j.value("forest_edges", std::size_t{0});
    for (const auto& r : j.value("rounds", json::array())) {
      cert.rounds.push_back(RoundStats{r.at("round").get<unsigned>(), r.at("threshold").get<std::size_t>(),
                                       r.at("cuts").get<std::size_t>(), r.at("edges_added").get<std::size_t>(),
                                       r.at("edges_total").get<std::size_t>()});
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Distributed simulation

PlayerMessage build_player_message(std::size_t n, std::size_t k, std::uint64_t seed, Vertex v,
                                   const std::vector<Edge>& incident, const ConnConfig& config) {
  if (v < 1 || v > n) throw Error(ErrorCode::IndexOutOfRange, "player vertex out of range");
  PlayerMessage msg;
  msg.vertex = v;
  ByteWriter w(msg.payload);
  w.magic(kMessageMagic);
  w.u8(kMessageVersion);
  w.u64(v);
  w.u64(n);
  w.u64(k);
  w.u64(seed);
  const auto layout = conn_layout(n, k, seed, config);
  w.u32(static_cast<std::uint32_t>(layout.size()));
  for (const auto& params : layout) {
    // Only the hash and shape are needed here; a one-vector instance keeps
    // the player's memory at a single sub-sketch.
    SupportFindParams local = params;
    local.n = 1;
    const SupportFindSketch shape(local);
    SubSketch sub = shape.make_subsketch();
    for (const Edge& raw : incident) {
      const Edge e = Edge::make(raw.u, raw.v);
      if (e.u != v && e.v != v) throw Error(ErrorCode::InvalidParams, "edge not incident to player");
      shape.update_subsketch(sub, edge_index(n, e.u, e.v), e.u == v ? +1 : -1);
    }
    w.words(sub.words());
  }
  return msg;
}

ConnSketch referee_reconstruct(std::size_t n, std::size_t k, std::uint64_t seed,
                               const std::vector<PlayerMessage>& messages, const ConnConfig& config) {
  ConnSketch sketch(n, k, seed, config);
  for (const auto& msg : messages) {
    ByteReader r(msg.payload);
    r.expect_magic(kMessageMagic);
    if (r.u8() != kMessageVersion) throw Error(ErrorCode::CorruptData, "unsupported message version");
    const std::uint64_t v = r.u64();
    if (r.u64() != n || r.u64() != k || r.u64() != seed)
      throw Error(ErrorCode::CorruptData, "message public parameters disagree with the referee");
    if (v < 1 || v > n || v != msg.vertex) throw Error(ErrorCode::CorruptData, "bad player vertex");
    if (r.u32() != sketch.instance_count()) throw Error(ErrorCode::CorruptData, "instance count mismatch");
    for (std::size_t i = 0; i < sketch.instance_count(); ++i) {
      SupportFindSketch& inst = sketch.instance(i);
      inst.add_subsketch(static_cast<std::size_t>(v), inst.read_subsketch(r));
    }
    if (r.remaining() != 0) throw Error(ErrorCode::CorruptData, "trailing bytes in player message");
  }
  return sketch;
}

DistributedReport simulate_distributed(std::size_t n, std::size_t k, std::uint64_t seed,
                                       const std::vector<Edge>& final_edges, const ConnSketch& direct,
                                       const ConnConfig& config, const CertifyOptions& options) {
  std::vector<std::vector<Edge>> incident(n + 1);
  for (const Edge& e : final_edges) {
    incident[e.u].push_back(e);
    incident[e.v].push_back(e);
  }
  std::vector<PlayerMessage> messages(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t v = 1; v <= n; ++v)
    messages[v - 1] = build_player_message(n, k, seed, static_cast<Vertex>(v), incident[v], config);

  DistributedReport report;
  report.players = n;
  std::uint64_t sum = 0;
  for (const auto& m : messages) {
    report.max_bits = std::max(report.max_bits, m.bit_length());
    sum += m.bit_length();
  }
  report.mean_bits = static_cast<double>(sum) / static_cast<double>(n);

  const ConnSketch referee = referee_reconstruct(n, k, seed, messages, config);
  report.identical = referee.serialize() == direct.serialize();
  if (!report.identical)
    throw Error(ErrorCode::SimulationBug, "referee reconstruction differs from direct ingest");
  report.certificate = build_certificate(referee, options);
  return report;
}

}  // namespace cutcert
