#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/gamma_ideal.hpp"
#include "core/oracle.hpp"

namespace hilbworst {

/// One line of a verification report. `generator` names the first failing object
/// (or "all"), `residual` shows its residual ("0" when everything vanished).
struct CheckRecord {
  std::string route;
  std::string check;
  std::string generator = "all";
  std::string residual = "0";
  std::size_t checked = 0;
  bool pass = true;
};

struct VerifyOptions {
  int n = 3;
  /// Selects phi and the target ideal of the DGLA route.
  Flavor flavor = Flavor::Hilbert;
  /// Any of "classical", "dgla", "based", "oracle", in the order given.
  std::vector<std::string> routes{"classical", "dgla", "based", "oracle"};
  std::uint64_t seed = 20261016;
  std::size_t samples = 100;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> records;
  std::vector<OracleSample> oracle_samples;
  bool ok() const;
  /// nullptr when every check passed.
  const CheckRecord* first_failure() const;
};

const std::vector<std::string>& known_routes();
/// "all" or a comma separated list; throws Error(InvalidArgument) on unknown names.
std::vector<std::string> parse_routes(const std::string& text);

void run_classical_route(int n, std::vector<CheckRecord>& out);
void run_dgla_route(int n, Flavor flavor, std::vector<CheckRecord>& out);
void run_based_route(int n, std::vector<CheckRecord>& out);
void run_oracle_route(int n, std::uint64_t seed, std::size_t samples, std::vector<CheckRecord>& out,
                      std::vector<OracleSample>* samples_out = nullptr);

VerifyReport verify(const VerifyOptions& opts);

}  // namespace hilbworst
