#pragma once

// Claim-by-claim verification reports and the JSON views shared by the C API.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctcodes/construct.hpp"
#include "ctcodes/cosets.hpp"
#include "ctcodes/graphs.hpp"
#include "ctcodes/symplectic.hpp"

namespace ctcodes {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string statement;
  Json expected;
  Json computed;
  ClaimStatus status = ClaimStatus::skipped;
};

struct VerifyOptions {
  int m = 4;
  // Enables the m = 6 group closures.
  bool heavy = false;
  bool skip_group = false;
  int threads = 1;
};

struct VerifyReport {
  int m = 0;
  std::vector<Claim> claims;
  std::vector<std::string> notes;

  std::size_t count(ClaimStatus s) const;
  bool all_passed() const { return count(ClaimStatus::fail) == 0; }
  // First failing claim id, if any.
  std::optional<std::string> first_failure() const;
  Json to_json() const;
};

// m must be 4 or 6.
VerifyReport verify_all(const VerifyOptions& options);

Json code_json(const Code& code);
Json array_json(const std::optional<IntersectionArray>& array);
Json profile_json(const Code& code, const CosetProfile& profile);
Json classification_json(const GraphClassification& c);

struct GroupReportOptions {
  int m = 4;
  std::optional<WeightClassPair> pair;  // all odd-difference pairs when empty
  bool heavy = false;
};
// Orders, extended order and orbit counts. m = 6 requires `heavy`.
Json group_report(const GroupReportOptions& options);

// Sorted hex dump of the Sp(m,2) closure.
std::string group_dump_hex(int m, bool heavy);

// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace ctcodes
