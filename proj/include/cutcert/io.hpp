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

// Stream files, certificate files and the distributed-sketching simulation.
//
// Stream file (text):
//   # comment
//   n <N> k <K>
//   + u v        insertion
//   - u v        deletion
// Vertices are 1-based. Blank lines and lines starting with '#' are ignored.

#ifndef CUTCERT_IO_HPP
#define CUTCERT_IO_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutcert/bytes.hpp"
#include "cutcert/certify.hpp"
#include "cutcert/graph_sketch.hpp"
#include "cutcert/oracle.hpp"

namespace cutcert {

struct StreamHeader {
  std::size_t n = 0;
  std::size_t k = 0;
};

struct EdgeUpdate {
  int sign = +1;  // +1 insert, -1 delete
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const EdgeUpdate&, const EdgeUpdate&) = default;
};

struct StreamData {
  StreamHeader header;
  std::vector<EdgeUpdate> updates;
};

/// Reads the stream once, front to back. on_header runs before the first
/// update. Throws ParseError (with line number) or SelfLoop.
void parse_stream(std::istream& in, const std::function<void(const StreamHeader&)>& on_header,
                  const std::function<void(const EdgeUpdate&)>& on_update);

StreamData read_stream(std::istream& in);
StreamData read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const StreamData& data);

/// Replays a stream into an exact graph.
ExactGraph replay(const StreamData& data, bool strict = true);

struct IngestResult {
  ConnSketch sketch;
  std::size_t updates = 0;
  std::uint64_t sketch_bytes = 0;
};

/// One pass over `in`. With strict set, an ExactGraph shadow rejects
/// duplicate insertions and deletions of absent edges.
IngestResult ingest(std::istream& in, std::uint64_t seed, bool strict = false,
                    const ConnConfig& config = {});
ConnSketch ingest(const StreamData& data, std::uint64_t seed, const ConnConfig& config = {});

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

/// Versioned JSON certificate.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Distributed sketching: each vertex is a player that sees only its incident
// edges. Seeds are public, so every player uses the same hashes.

struct PlayerMessage {
  Vertex vertex = 0;
  Bytes payload;

  std::uint64_t bit_length() const noexcept { return payload.size() * 8; }
};

/// Player v's message: its sub-sketch in every instance.
PlayerMessage build_player_message(std::size_t n, std::size_t k, std::uint64_t seed, Vertex v,
                                   const std::vector<Edge>& incident, const ConnConfig& config = {});

/// The referee adds every message into a fresh sketch.
ConnSketch referee_reconstruct(std::size_t n, std::size_t k, std::uint64_t seed,
                               const std::vector<PlayerMessage>& messages, const ConnConfig& config = {});

struct DistributedReport {
  std::size_t players = 0;
  std::uint64_t max_bits = 0;
  double mean_bits = 0;
  bool identical = false;  // referee sketch == direct ingest
  Certificate certificate;
};

/// Builds all n messages from the final graph, reconstructs at the referee,
/// compares with `direct` byte for byte and certifies the reconstruction.
/// Throws SimulationBug on a mismatch.
DistributedReport simulate_distributed(std::size_t n, std::size_t k, std::uint64_t seed,
                                       const std::vector<Edge>& final_edges, const ConnSketch& direct,
                                       const ConnConfig& config = {}, const CertifyOptions& options = {});

}  // namespace cutcert

#endif  // CUTCERT_IO_HPP
