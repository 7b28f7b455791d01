#include "rtoric/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rtoric {

std::string_view to_string(ClaimStatus status)
{
  switch (status) {
  case ClaimStatus::pass: return "pass";
  case ClaimStatus::fail: return "fail";
  case ClaimStatus::refused: return "refused";
  }
  return "fail";
}

ClaimStatus parse_claim_status(std::string_view text)
{
  if (text == "pass") { return ClaimStatus::pass; }
  if (text == "fail") { return ClaimStatus::fail; }
  if (text == "refused") { return ClaimStatus::refused; }
  throw std::invalid_argument("unknown claim status: " + std::string(text));
}

bool is_claim_name(std::string_view name)
{
  return std::find(kClaimNames.begin(), kClaimNames.end(), name) != kClaimNames.end();
}

bool VerificationReport::passed() const
{
  return std::all_of(claims.begin(), claims.end(), [](Claim const &c) { return c.status == ClaimStatus::pass; });
}

bool VerificationReport::any_failed() const
{
  return std::any_of(claims.begin(), claims.end(), [](Claim const &c) { return c.status == ClaimStatus::fail; });
}

bool VerificationReport::any_refused() const
{
  return std::any_of(claims.begin(), claims.end(), [](Claim const &c) { return c.status == ClaimStatus::refused; });
}

int exit_code(std::span<VerificationReport const> reports)
{
  bool failed = false;
  bool refused = false;
  for (auto const &r : reports) {
    failed = failed || r.any_failed();
    refused = refused || r.any_refused();
  }
  if (failed) { return 1; }
  return refused ? 2 : 0;
}

void to_json(nlohmann::json &j, Claim const &c)
{
  j = nlohmann::json{{"name", c.name},
                     {"check", c.check},
                     {"status", std::string(to_string(c.status))},
                     {"detail", c.detail},
                     {"millis", c.millis}};
}

void from_json(nlohmann::json const &j, Claim &c)
{
  j.at("name").get_to(c.name);
  j.at("check").get_to(c.check);
  c.status = parse_claim_status(j.at("status").get<std::string>());
  j.at("detail").get_to(c.detail);
  j.at("millis").get_to(c.millis);
}

void to_json(nlohmann::json &j, ReportInstance const &r)
{
  j = nlohmann::json{{"a", r.a}, {"b", r.b}, {"n", r.n}};
  j["i"] = r.i ? nlohmann::json(*r.i) : nlohmann::json(nullptr);
}

void from_json(nlohmann::json const &j, ReportInstance &r)
{
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("n").get_to(r.n);
  auto const &i = j.at("i");
  r.i = i.is_null() ? std::nullopt : std::optional<int>(i.get<int>());
}

void to_json(nlohmann::json &j, VerificationReport const &r)
{
  j = nlohmann::json{{"VerificationReport", {{"instance", r.instance}, {"claims", r.claims}}}};
}

void from_json(nlohmann::json const &j, VerificationReport &r)
{
  auto const &body = j.at("VerificationReport");
  body.at("instance").get_to(r.instance);
  body.at("claims").get_to(r.claims);
}

std::string render_text(std::span<VerificationReport const> reports)
{
  std::ostringstream out;
  for (auto const &r : reports) {
    out << "instance a=" << r.instance.a << " b=" << r.instance.b << " n=" << r.instance.n;
    if (r.instance.i) { out << " i=" << *r.instance.i; }
    out << '\n';
    for (auto const &c : r.claims) {
      out << "  [" << to_string(c.status) << "] " << c.name << " / " << c.check;
      if (!c.detail.empty()) { out << ": " << c.detail; }
      out << " (" << std::fixed << std::setprecision(1) << c.millis << " ms)\n";
    }
  }
  return out.str();
}

std::string render_json(std::span<VerificationReport const> reports)
{
  nlohmann::json j = nlohmann::json::array();
  for (auto const &r : reports) { j.push_back(r); }
  return j.dump(2) + "\n";
}

std::vector<VerificationReport> parse_reports_json(std::string_view text)
{
  return nlohmann::json::parse(text).get<std::vector<VerificationReport>>();
}

ReportBuilder::ReportBuilder(std::string name, ReportInstance instance)
  : name_(std::move(name))
  , report_{instance, {}}
{
  if (!is_claim_name(name_)) { throw std::invalid_argument("unknown claim name: " + name_); }
}

void ReportBuilder::refuse(std::string check, std::string detail)
{
  refused_ = true;
  record(std::move(check), ClaimStatus::refused, std::move(detail));
}

void ReportBuilder::record(std::string check, ClaimStatus status, std::string detail, double millis)
{
  report_.claims.push_back(Claim{name_, std::move(check), status, std::move(detail), millis});
}

VerificationReport ReportBuilder::finish() && { return std::move(report_); }

} // namespace rtoric
