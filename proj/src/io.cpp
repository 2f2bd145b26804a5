#include "spq/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spq {

using nlohmann::json;

namespace {

class SigmaLexer {
 public:
  explicit SigmaLexer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Element element() {
    skip_space();
    Element e;
    if (peek() == '(') {
      ++pos_;
      int lo = number();
      expect(',');
      int hi = number();
      expect(')');
      e = Pair{lo, hi, sign()};
    } else {
      int i = number();
      e = Singleton{i, sign()};
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
      throw SigmaParseError(pos_, "expected whitespace between tokens");
    return e;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw SigmaParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw SigmaParseError(start, "index too large");
      ++pos_;
    }
    if (pos_ == start) throw SigmaParseError(pos_, "expected an index");
    return static_cast<int>(value);
  }

  Sign sign() {
    char c = peek();
    if (c != '+' && c != '-') throw SigmaParseError(pos_, "expected '+' or '-'");
    ++pos_;
    return c == '+' ? Sign::Plus : Sign::Minus;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Sign sign_from_json(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw Error(ErrorKind::ParseError, "sign must be \"+\" or \"-\", got \"" + s + "\"");
}

template <typename F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

SignedInvolution parse_sigma(std::string_view text) {
  SigmaLexer lex(text);
  std::vector<Element> raw;
  int n = 0;
  while (!lex.at_end()) {
    raw.push_back(lex.element());
    n = std::max(n, largest_index(raw.back()));
  }
  if (raw.empty()) throw SigmaParseError(0, "empty parameter");
  return SignedInvolution::validate(raw, n);
}

std::string render_sigma(const SignedInvolution& sigma) {
  std::string out;
  for (const auto& e : sigma.elements()) {
    if (!out.empty()) out += ' ';
    if (const auto* s = std::get_if<Singleton>(&e)) {
      out += std::to_string(s->index);
      out += sign_char(s->sign);
    } else {
      const auto& p = std::get<Pair>(e);
      out += "(" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ")";
      out += sign_char(p.sign);
    }
  }
  return out;
}

json to_json(const DominoTableau& t) {
  json ds = json::array();
  for (const auto& d : t.dominoes())
    ds.push_back({{"label", d.label},
                  {"cells", {{d.first.row, d.first.col}, {d.second.row, d.second.col}}}});
  return {{"dominoes", ds}};
}

DominoTableau domino_tableau_from_json(const json& j) {
  return parse_guard([&] {
    std::vector<Domino> ds;
    for (const auto& d : j.at("dominoes")) {
      const auto& cells = d.at("cells");
      if (cells.size() != 2) throw Error(ErrorKind::ParseError, "a domino has exactly two cells");
      Square a{cells[0].at(0).get<int>(), cells[0].at(1).get<int>()};
      Square b{cells[1].at(0).get<int>(), cells[1].at(1).get<int>()};
      if (b < a) std::swap(a, b);
      ds.push_back(Domino{d.at("label").get<int>(), a, b});
    }
    return DominoTableau::from_dominoes(std::move(ds));
  });
}

json to_json(const SignedTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back({{"length", r.length}, {"start", std::string(1, sign_char(r.start))}});
  return {{"double_rows", rows}};
}

SignedTableau signed_tableau_from_json(const json& j) {
  return parse_guard([&] {
    std::vector<DoubleRow> rows;
    for (const auto& r : j.at("double_rows")) rows.push_back({r.at("length").get<int>(), sign_from_json(r.at("start"))});
    return SignedTableau::from_rows(std::move(rows));
  });
}

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"sigma", f.sigma}, {"detail", f.detail}});
  json out{{"suite", r.suite}, {"n", r.n}, {"p", r.p}, {"checked", r.checked}, {"failures", failures}};
  if (!r.metrics.empty()) {
    json m = json::array();
    for (const auto& [k, v] : r.metrics) m.push_back({{"name", k}, {"value", v}});
    out["metrics"] = m;
  }
  return out;
}

Report report_from_json(const json& j) {
  return parse_guard([&] {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<int>();
    r.checked = j.at("checked").get<std::int64_t>();
    for (const auto& f : j.at("failures"))
      r.failures.push_back({f.at("sigma").get<std::string>(), f.at("detail").get<std::string>()});
    if (j.contains("metrics"))
      for (const auto& m : j.at("metrics"))
        r.metrics.emplace_back(m.at("name").get<std::string>(), m.at("value").get<std::int64_t>());
    return r;
  });
}

json to_json(const TableauPair& pair) {
  json members = json::array();
  for (const auto& m : pair.t2_class.members()) members.push_back(to_json(m));
  return {{"t1", to_json(pair.t1)},
          {"class", members},
          {"descriptor", normalize(pair.t2_class.representative()).to_string()}};
}

std::string render_ascii(const DominoTableau& t) {
  const Shape shape = t.shape();
  const int rows = shape.rows();
  if (rows == 0) return "(empty)\n";
  const int cols = shape.parts[0];
  std::size_t width = 1;
  for (const auto& d : t.dominoes()) width = std::max(width, std::to_string(d.label).size());

  // Cells outside the shape read as 0; an edge is drawn between cells with
  // different labels.
  auto label = [&](int r, int c) { return t.label_at({r, c}).value_or(0); };
  auto split = [&](int r1, int c1, int r2, int c2) { return label(r1, c1) != label(r2, c2); };
  auto trimmed = [](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    return line + "\n";
  };

  std::string out;
  for (int r = 0; r <= rows; ++r) {
    std::string border;
    for (int c = 0; c <= cols; ++c) {
      bool corner = (c > 0 && split(r, c, r + 1, c)) || (c < cols && split(r, c + 1, r + 1, c + 1)) ||
                    (r > 0 && split(r, c, r, c + 1)) || (r < rows && split(r + 1, c, r + 1, c + 1));
      border += corner ? '+' : ' ';
      if (c < cols) border += std::string(width, split(r, c + 1, r + 1, c + 1) ? '-' : ' ');
    }
    out += trimmed(border);
    if (r == rows) break;

    std::string cells;
    for (int c = 0; c <= cols; ++c) {
      cells += split(r + 1, c, r + 1, c + 1) ? '|' : ' ';
      if (c == cols) break;
      const int l = label(r + 1, c + 1);
      std::string content = l && t.at(l).first == Square{r + 1, c + 1} ? std::to_string(l) : "";
      cells += content + std::string(width - content.size(), ' ');
    }
    out += trimmed(cells);
  }
  return out;
}

std::string render_ascii(const SignedTableau& t) {
  std::string out;
  for (const auto& r : t.rows()) {
    std::string line;
    Sign s = r.start;
    for (int k = 0; k < r.length; ++k, s = -s) line += sign_char(s);
    out += line + "\n" + line + "\n";
  }
  return out.empty() ? "(empty)\n" : out;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.suite << " n=" << r.n << " p=" << (r.p < 0 ? std::string("all") : std::to_string(r.p))
      << " checked=" << r.checked;
  for (const auto& [k, v] : r.metrics) out << ' ' << k << '=' << v;
  out << (r.ok() ? " ok" : " FAIL failures=" + std::to_string(r.failures.size())) << '\n';
  for (const auto& f : r.failures) out << "  " << (f.sigma.empty() ? "-" : f.sigma) << ": " << f.detail << '\n';
  return out.str();
}

std::string to_dot(const CellGraph& g) {
  std::ostringstream out;
  out << "digraph cells_n" << g.n << "_p" << g.p << " {\n";
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n    label=\"" << g.descriptors[c].to_string() << "\";\n";
    for (auto v : g.components[c]) out << "    v" << v << " [label=\"" << render_sigma(g.vertices[v]) << "\"];\n";
    out << "  }\n";
  }
  for (const auto& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"(" << to_string(e.alpha) << "," << to_string(e.beta)
        << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace spq
