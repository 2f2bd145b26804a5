#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spq/domino.hpp"
#include "spq/hmap.hpp"
#include "spq/involution.hpp"
#include "spq/signed_tableau.hpp"
#include "spq/verify.hpp"

namespace spq {

// A ParseError that also reports the offending character offset.
class SigmaParseError : public Error {
 public:
  SigmaParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Whitespace-separated tokens I+, I-, (I,J)+, (I,J)-; n is the largest index.
SignedInvolution parse_sigma(std::string_view text);
std::string render_sigma(const SignedInvolution& sigma);

nlohmann::json to_json(const DominoTableau& t);
DominoTableau domino_tableau_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SignedTableau& t);
SignedTableau signed_tableau_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
// t1, class members and the normalized descriptor.
nlohmann::json to_json(const TableauPair& pair);

// Bordered grid; each label is written once, in the domino's upper/left cell.
std::string render_ascii(const DominoTableau& t);
// One line of alternating signs per row.
std::string render_ascii(const SignedTableau& t);
// "suite n=.. p=.. checked=.. ok|FAIL" plus one line per failure.
std::string render_text(const Report& r);

std::string to_dot(const CellGraph& g);

}  // namespace spq
