#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdlab/rng.hpp"

namespace qdlab {

class StateVector;
class QuantumRegister;

// Qubits needed to carry a dim-dimensional state: ceil(log2 dim).
inline std::uint64_t qubit_cost(std::int64_t dim) {
  if (dim <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(dim - 1));
}

// Monotone counters of everything the sender has shipped. Counts only
// sender -> receiver traffic; receiver-side chatter is logged in the
// transcript but never charged.
struct CostLedger {
  std::uint64_t classical_bits = 0;
  std::uint64_t qubits = 0;

  void charge_classical(std::uint64_t nbits) { classical_bits += nbits; }
  void charge_qubits(std::uint64_t nqubits) { qubits += nqubits; }
  CostLedger& operator+=(const CostLedger& other) {
    classical_bits += other.classical_bits;
    qubits += other.qubits;
    return *this;
  }
  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

enum class MessageKind { kClassical, kQuantum };

// Append-only record of every message in a run, including uncharged
// receiver-to-receiver traffic, so ledger exactness can be audited.
struct TranscriptRecord {
  std::string sender;
  std::string receiver;
  MessageKind kind = MessageKind::kClassical;
  std::uint64_t size = 0;  // bits for classical payloads, qubits for quantum
  bool charged = true;
};

struct Transcript {
  std::vector<TranscriptRecord> records;

  void log(std::string sender, std::string receiver, MessageKind kind,
           std::uint64_t size, bool charged) {
    records.push_back({std::move(sender), std::move(receiver), kind, size, charged});
  }

  // Sum of charged records, for auditing against the ledger.
  CostLedger charged_totals() const;

  std::string to_jsonl() const;
};

// A classical payload of explicit bits. The charged size is the bit count.
struct ClassicalMessage {
  std::vector<std::uint8_t> bits;  // one 0/1 value per entry
  std::uint64_t size_bits() const { return bits.size(); }
};

enum class AliceChannel { kClassical, kQuantum };
enum class BobsInterconnect { kNone, kClassical, kQuantumDisallowed };

struct ScenarioConfig {
  AliceChannel alice_channel = AliceChannel::kQuantum;
  BobsInterconnect bobs_interconnect = BobsInterconnect::kClassical;
  int bob_count = 1;
};

ScenarioConfig scenario_from_json(const nlohmann::json& params);

// Mints a fresh single-use register carrying the state and charges
// ceil(log2 dim) qubits to the ledger. Declared in quantum.hpp as a friend;
// redeclared here for callers that include only the runtime.
QuantumRegister mint_register(const StateVector& state, CostLedger& ledger);

// Uniform runner surface: protocols consume a JSON instance plus JSON
// parameters and report JSON outputs alongside the audited ledger.
struct ProtocolResult {
  nlohmann::json outputs;
  CostLedger ledger;
  Transcript transcript;
};

using ProtocolFn = std::function<ProtocolResult(
    const nlohmann::json& instance, const nlohmann::json& params, SeededRng& rng)>;

class ProtocolRegistry {
 public:
  void add(const std::string& name, ProtocolFn fn);
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  const ProtocolFn& at(const std::string& name) const;

  // Registry with all built-in protocols registered.
  static const ProtocolRegistry& builtin();

 private:
  std::map<std::string, ProtocolFn> protocols_;
};

// Dispatches to a registered protocol. Throws UnknownProtocolError for
// unregistered names and ScenarioViolationError when params request a
// forbidden scenario (e.g. "bobs_interconnect": "quantum").
ProtocolResult run_protocol(const std::string& name,
                            const nlohmann::json& instance,
                            const nlohmann::json& params, SeededRng& rng);

}  // namespace qdlab
