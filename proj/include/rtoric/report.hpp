#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace rtoric {

enum class ClaimStatus { pass, fail, refused };

std::string_view to_string(ClaimStatus status);
ClaimStatus parse_claim_status(std::string_view text);

/// Names accepted by `verify`; each names one result or worked example.
inline constexpr std::array<std::string_view, 10> kClaimNames = {
  "lemma2", "lemma3", "prop-gb1", "thm-gb2", "cor-gb1",
  "cor-gb2", "example5", "example-n4-minors", "example-gcd3", "example-a3b3"};

bool is_claim_name(std::string_view name);

struct Claim
{
  std::string name;   // one of kClaimNames
  std::string check;  // which sub-claim
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
  double millis = 0.0;

  friend bool operator==(Claim const &, Claim const &) = default;
};

struct ReportInstance
{
  int a = 0;
  int b = 0;
  int n = 0;
  std::optional<int> i;

  friend bool operator==(ReportInstance const &, ReportInstance const &) = default;
};

struct VerificationReport
{
  ReportInstance instance;
  std::vector<Claim> claims;

  bool passed() const;
  bool any_failed() const;
  bool any_refused() const;

  friend bool operator==(VerificationReport const &, VerificationReport const &) = default;
};

/// 0 when every claim passed, 1 when any claim failed, otherwise 2 (refusal).
int exit_code(std::span<VerificationReport const> reports);

void to_json(nlohmann::json &j, Claim const &c);
void from_json(nlohmann::json const &j, Claim &c);
void to_json(nlohmann::json &j, ReportInstance const &r);
void from_json(nlohmann::json const &j, ReportInstance &r);
void to_json(nlohmann::json &j, VerificationReport const &r);
void from_json(nlohmann::json const &j, VerificationReport &r);

std::string render_text(std::span<VerificationReport const> reports);
std::string render_json(std::span<VerificationReport const> reports);
std::vector<VerificationReport> parse_reports_json(std::string_view text);

/// Collects timed sub-claims for one named claim.
class ReportBuilder
{
public:
  struct Outcome
  {
    bool ok = false;
    std::string detail;
  };

  ReportBuilder(std::string name, ReportInstance instance);

  /// Runs `body` (returning Outcome) and records it with its wall time. An
  /// exception from `body` records a failure carrying the message.
  template <typename Body> bool check(std::string check, Body &&body);
  void refuse(std::string check, std::string detail);
  void record(std::string check, ClaimStatus status, std::string detail, double millis = 0.0);

  bool refused() const { return refused_; }
  VerificationReport finish() &&;

private:
  std::string name_;
  VerificationReport report_;
  bool refused_ = false;
};

template <typename Body> bool ReportBuilder::check(std::string check, Body &&body)
{
  auto const start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = std::forward<Body>(body)();
  } catch (std::exception const &e) {
    outcome = Outcome{false, std::string("error: ") + e.what()};
  }
  double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  record(std::move(check), outcome.ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(outcome.detail), ms);
  return outcome.ok;
}

} // namespace rtoric
