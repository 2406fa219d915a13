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

#include "cutcert/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cutcert/certify.hpp"
#include "cutcert/error.hpp"
#include "cutcert/graph_sketch.hpp"
#include "cutcert/io.hpp"
#include "cutcert/oracle.hpp"

namespace cutcert {

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CUTCERT_SEED"); env && *env) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(env, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0')
      throw Error(ErrorCode::InvalidParams, std::string("CUTCERT_SEED is not an integer: ") + env);
    return value;
  }
  return kDefaultSeed;
}

void print_side(std::ostream& out, const VertexSet& side) {
  out << '[';
  for (std::size_t i = 0; i < side.size(); ++i) out << (i ? " " : "") << side[i];
  out << ']';
}

int kind_exit(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Positive: return exit_code::kOk;
    case CertificateKind::NegativeCut: return exit_code::kNegativeCut;
    case CertificateKind::NegativeDisconnected: return exit_code::kNegativeDisconnected;
  }
  return exit_code::kError;
}

void print_certificate_summary(std::ostream& out, const Certificate& cert) {
  out << "kind " << to_string(cert.kind) << '\n';
  switch (cert.kind) {
    case CertificateKind::Positive:
      out << "edges " << cert.edges.size() << '\n';
      break;
    case CertificateKind::NegativeCut:
      out << "side ";
      print_side(out, cert.side);
      out << "\ncut_edges " << cert.edges.size() << '\n';
      break;
    case CertificateKind::NegativeDisconnected:
      out << "component ";
      print_side(out, cert.side);
      out << '\n';
      break;
  }
}

int cmd_ingest(const std::string& stream, std::uint64_t seed, const std::string& out_path, bool strict,
               std::ostream& out) {
  std::ifstream in(stream);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + stream);
  IngestResult result = ingest(in, seed, strict);
  const Bytes bytes = result.sketch.serialize();
  write_file(out_path, bytes);
  out << "n " << result.sketch.n() << "\nk " << result.sketch.k() << "\nseed " << seed << "\nupdates "
      << result.updates << "\nbytes " << bytes.size() << '\n';
  return exit_code::kOk;
}

int cmd_certify(const std::string& sketch_path, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const ConnSketch sketch = ConnSketch::deserialize(read_file(sketch_path));
  Certificate cert;
  try {
    cert = build_certificate(sketch);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CertifyFailed && e.code() != ErrorCode::BudgetExceeded) throw;
    err << "certify failed: " << e.what() << '\n';
    return exit_code::kCertifyFailed;
  }
  const std::string text = certificate_to_json(cert);
  write_file(out_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  print_certificate_summary(out, cert);
  return kind_exit(cert.kind);
}

int cmd_verify(const std::string& stream, const std::string& cert_path, std::ostream& out) {
  const StreamData data = read_stream_file(stream);
  const ExactGraph graph = replay(data, true);
  const Bytes raw = read_file(cert_path);
  const Certificate cert = certificate_from_json(std::string(raw.begin(), raw.end()));
  if (cert.k != data.header.k) {
    out << "invalid: certificate target k=" << cert.k << " differs from stream k=" << data.header.k << '\n';
    return exit_code::kInvalid;
  }
  const Verdict verdict = validate_certificate(graph, data.header.k, cert);
  if (verdict.valid) {
    out << "valid " << to_string(cert.kind) << '\n';
    return exit_code::kOk;
  }
  out << "invalid: " << verdict.reason << '\n';
  return exit_code::kInvalid;
}

int cmd_simulate(const std::string& stream, std::uint64_t seed, std::ostream& out) {
  const StreamData data = read_stream_file(stream);
  const ExactGraph graph = replay(data, true);
  const ConnSketch direct = ingest(data, seed);
  const DistributedReport report =
      simulate_distributed(data.header.n, data.header.k, seed, graph.edges(), direct);
  const Verdict verdict = validate_certificate(graph, data.header.k, report.certificate);
  out << "players " << report.players << "\nmax_message_bits " << report.max_bits << "\nmean_message_bits "
      << static_cast<std::uint64_t>(report.mean_bits) << "\nidentical " << (report.identical ? "yes" : "no")
      << '\n';
  print_certificate_summary(out, report.certificate);
  out << "verdict " << (verdict.valid ? "valid" : "invalid: " + verdict.reason) << '\n';
  return verdict.valid ? exit_code::kOk : exit_code::kInvalid;
}

int cmd_stats(const std::string& sketch_path, std::ostream& out) {
  const ConnSketch sketch = ConnSketch::deserialize(read_file(sketch_path));
  const ConnStats s = sketch.stats();
  out << "n " << s.n << "\nk " << s.k << "\nm " << s.m << "\nforest_rounds " << s.forest.size()
      << "\nstacks " << s.stacks.size() << '\n';
  for (const auto& st : s.forest)
    out << st.name << " budget=" << st.budget << " t=" << st.t << " ell=" << st.ell << " levels=" << st.levels
        << " bits=" << st.bits << '\n';
  for (const auto& st : s.stacks)
    out << st.name << " budget=" << st.budget << " t=" << st.t << " ell=" << st.ell << " levels=" << st.levels
        << " bits=" << st.bits << '\n';
  out << "forest_bits " << s.forest_bits << "\nstack_bits " << s.stack_bits << "\ntotal_bits " << s.total_bits
      << "\nsum_t " << s.sum_t << '\n';
  return exit_code::kOk;
}

int cmd_mincut(const std::string& stream, std::ostream& out) {
  const StreamData data = read_stream_file(stream);
  const ExactGraph graph = replay(data, true);
  const MinCut cut = exact_min_cut(data.header.n, graph.edges());
  out << "mincut " << cut.value << "\nside ";
  print_side(out, cut.side);
  out << "\nk_connected " << (cut.value >= data.header.k ? "yes" : "no") << '\n';
  return exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear sketches and k-edge-connectivity certificates for dynamic graph streams", "cutcert"};
  app.require_subcommand(1);

  std::string stream, out_path, sketch_path, cert_path;
  std::optional<std::uint64_t> seed;
  bool strict = false;

  auto* ingest_cmd = app.add_subcommand("ingest", "Sketch a stream in one pass");
  ingest_cmd->add_option("--stream", stream, "Stream file")->required();
  ingest_cmd->add_option("--seed", seed, "Public seed (default: $CUTCERT_SEED)");
  ingest_cmd->add_option("--out", out_path, "Sketch output file")->required();
  ingest_cmd->add_flag("--strict", strict, "Reject duplicate inserts and deletes of absent edges");

  auto* certify_cmd = app.add_subcommand("certify", "Build a certificate from a sketch");
  certify_cmd->add_option("--sketch", sketch_path, "Sketch file")->required();
  certify_cmd->add_option("--out", out_path, "Certificate output file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a stream");
  verify_cmd->add_option("--stream", stream, "Stream file")->required();
  verify_cmd->add_option("--cert", cert_path, "Certificate file")->required();

  auto* sim_cmd = app.add_subcommand("simulate-distributed", "Run the one-message-per-vertex protocol");
  sim_cmd->add_option("--stream", stream, "Stream file")->required();
  sim_cmd->add_option("--seed", seed, "Public seed (default: $CUTCERT_SEED)");

  auto* stats_cmd = app.add_subcommand("stats", "Show sketch layout and size");
  stats_cmd->add_option("--sketch", sketch_path, "Sketch file")->required();

  auto* mincut_cmd = app.add_subcommand("oracle-mincut", "Exact min cut of the final graph");
  mincut_cmd->add_option("--stream", stream, "Stream file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kError;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(stream, resolve_seed(seed), out_path, strict, out);
    if (*certify_cmd) return cmd_certify(sketch_path, out_path, out, err);
    if (*verify_cmd) return cmd_verify(stream, cert_path, out);
    if (*sim_cmd) return cmd_simulate(stream, resolve_seed(seed), out);
    if (*stats_cmd) return cmd_stats(sketch_path, out);
    if (*mincut_cmd) return cmd_mincut(stream, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code::kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kError;
  }
  return exit_code::kError;
}

}  // namespace cutcert
