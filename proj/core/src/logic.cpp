#include "incompat/logic.hpp"

#include <algorithm>
#include <cctype>

#include "incompat/parser.hpp"

namespace incompat {

std::string_view logic_name(LogicId id) {
  switch (id) {
    case LogicId::BI: return "bI";
    case LogicId::NBI: return "nbI";
    case LogicId::NBIciw: return "nbIciw";
    case LogicId::NBIci: return "nbIci";
    case LogicId::NBIcl: return "nbIcl";
    case LogicId::MBC: return "mbC";
    case LogicId::MBCciw: return "mbCciw";
    case LogicId::MBCci: return "mbCci";
    case LogicId::MBCcl: return "mbCcl";
    case LogicId::CPLSheffer: return "cpl_sheffer";
    case LogicId::NBISheffer: return "nbI_sheffer";
  }
  return "?";
}

std::optional<LogicId> parse_logic(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (LogicId id : all_logics()) {
    std::string cand(logic_name(id));
    std::transform(cand.begin(), cand.end(), cand.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == cand) return id;
  }
  return std::nullopt;
}

std::vector<LogicId> all_logics() {
  return {LogicId::BI,     LogicId::NBI,    LogicId::NBIciw, LogicId::NBIci,
          LogicId::NBIcl,  LogicId::MBC,    LogicId::MBCciw, LogicId::MBCci,
          LogicId::MBCcl,  LogicId::CPLSheffer, LogicId::NBISheffer};
}

Sig signature_of(LogicId id) {
  switch (id) {
    case LogicId::BI:
    case LogicId::CPLSheffer:
      return Sig::BI;
    case LogicId::MBC:
    case LogicId::MBCciw:
    case LogicId::MBCci:
    case LogicId::MBCcl:
      return Sig::LFI;
    default:
      return Sig::NBI;
  }
}

bool tableau_supported(LogicId id) {
  switch (id) {
    case LogicId::BI:
    case LogicId::NBI:
    case LogicId::NBIciw:
    case LogicId::NBIci:
    case LogicId::NBIcl:
      return true;
    default:
      return false;
  }
}

Sequent parse_sequent(std::string_view text, LogicId logic) {
  Sig sig = signature_of(logic);
  std::size_t sep = text.find("|-");
  if (sep == std::string_view::npos)
    throw ParseError("expected `|-` in sequent", text.size());
  std::string_view lhs = text.substr(0, sep);
  std::string_view rhs = text.substr(sep + 2);

  Sequent s;
  s.logic = logic;
  if (lhs.find_first_not_of(" \t") != std::string_view::npos) {
    // split premises on top-level commas (commas also occur inside bot(..,..))
    std::size_t depth = 0, start = 0;
    auto flush = [&](std::size_t end) {
      s.premises.push_back(parse(lhs.substr(start, end - start), sig));
    };
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] == '(') ++depth;
      else if (lhs[i] == ')') { if (depth) --depth; }
      else if (lhs[i] == ',' && depth == 0) {
        flush(i);
        start = i + 1;
      }
    }
    flush(lhs.size());
  }
  s.conclusion = parse(rhs, sig);
  return s;
}

Formula sequent_test_formula(const std::vector<Formula>& premises, const Formula& conclusion) {
  if (premises.empty()) return conclusion;
  Formula fold = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) fold = conj(fold, premises[i]);
  return imp(fold, conclusion);
}

}  // namespace incompat
