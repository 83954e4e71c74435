#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "incompat/formula.hpp"

namespace incompat {

// Every logic with an engine in this project. The two Sheffer variants are
// the collapse targets: # is the deterministic classical NAND there.
enum class LogicId : std::uint8_t {
  BI,
  NBI,
  NBIciw,
  NBIci,
  NBIcl,
  MBC,
  MBCciw,
  MBCci,
  MBCcl,
  CPLSheffer,
  NBISheffer,
};

std::string_view logic_name(LogicId id);
std::optional<LogicId> parse_logic(std::string_view name);
std::vector<LogicId> all_logics();

Sig signature_of(LogicId id);

// The tableau calculi exist for the incompatibility logics only.
bool tableau_supported(LogicId id);

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
  LogicId logic;
};

// "g1, g2 |- f"; empty premises written "|- f". Formulas are parsed in the
// logic's signature.
Sequent parse_sequent(std::string_view text, LogicId logic);

// Left-associated premise fold: (((g1 & g2) & ...) & gm) -> f, or f itself
// when there are no premises.
Formula sequent_test_formula(const std::vector<Formula>& premises, const Formula& conclusion);

}  // namespace incompat
