#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/family/family.hpp"

namespace pdlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kResourceLimit = 3 };

/// A named ideal together with what verification asks about it.
struct Instance {
  std::string label;
  std::optional<FamilyParams> params;
  IdealPresentation ideal;
  Monomial witness;
  std::vector<Monomial> targets;
  std::int64_t expected_pd = 0;
  /// Degree up to which a truncated basis answers every membership question.
  int verification_degree = 0;
};

/// "g:(m1,...,mn)", "mccullough m n d", or "caviglia d".
Instance parse_instance(const std::vector<std::string>& words, const Field& field = Field::prime());
/// "32003" or "QQ".
Field parse_field(const std::string& text);

/// Reads the `construct --format text` rendering back into an ideal.
IdealPresentation parse_ideal_text(const std::string& text);
/// Macaulay2 script defining R and I and printing the Betti table, pd, reg.
std::string to_macaulay2(const IdealPresentation& ideal, const std::string& title = {});

/// Truncated basis, socle check and membership lemma, rendered as text,
/// json or m2; returns kOk or kVerificationFailed.
int verify_instance(const Instance& inst, const std::string& format, std::ostream& out);

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdlab::cli
