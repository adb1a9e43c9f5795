// Copyright 2026 The densmod Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "densmod/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "densmod/errors.hpp"

namespace densmod {

namespace {

struct Token {
  enum Kind { kWord, kQuoted } kind;
  std::string text;
  std::size_t column;  // 1-based
};

// Splits one line into words and quoted strings, dropping any `#` comment.
std::vector<Token> tokenize(std::string_view line, const std::string& source, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      auto close = line.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError(source, lineno, i + 1, "unterminated quoted string");
      }
      out.push_back({Token::kQuoted, std::string(line.substr(i + 1, close - i - 1)), i + 1});
      i = close + 1;
    } else {
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
             line[i] != '#' && line[i] != '"') {
        ++i;
      }
      out.push_back({Token::kWord, std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto end = nl == std::string_view::npos ? text.size() : nl;
    fn(++lineno, text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

class LineParser {
 public:
  LineParser(const std::string& source, std::size_t line, std::vector<Token> tokens,
             std::size_t line_length)
      : source_(source), line_(line), tokens_(std::move(tokens)), end_column_(line_length + 1) {}

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(source_, line_, column, message);
  }

  std::size_t column() const {
    return next_ < tokens_.size() ? tokens_[next_].column : end_column_;
  }

  const Token& take(Token::Kind kind, const std::string& what) {
    if (next_ >= tokens_.size()) fail(end_column_, "expected " + what);
    const Token& t = tokens_[next_];
    if (t.kind != kind) fail(t.column, "expected " + what);
    ++next_;
    return t;
  }

  const Token& take_id(const std::string& what) {
    const Token& t = take(Token::kWord, what);
    if (!is_valid_id(t.text)) fail(t.column, "invalid " + what + " '" + t.text + "'");
    return t;
  }

  void keyword(std::string_view kw) {
    if (next_ >= tokens_.size() || tokens_[next_].kind != Token::kWord ||
        tokens_[next_].text != kw) {
      fail(column(), "expected '" + std::string(kw) + "'");
    }
    ++next_;
  }

  std::size_t number(const std::string& what) {
    const Token& t = take(Token::kWord, what);
    return to_number(t.text, t.column, what);
  }

  std::size_t to_number(std::string_view text, std::size_t col, const std::string& what) const {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(col, "expected " + what + ", got '" + std::string(text) + "'");
    }
    return value;
  }

  void done() const {
    if (next_ < tokens_.size()) fail(tokens_[next_].column, "unexpected '" + tokens_[next_].text + "'");
  }

 private:
  const std::string& source_;
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t end_column_;
};

}  // namespace

DesignDocument parse_design_document(std::string_view text, std::string source) {
  DesignDocument doc{std::move(source), {}};
  std::map<std::string, bool, std::less<>> declared;  // id -> is structor

  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tokens = tokenize(line, doc.source, lineno);
    if (tokens.empty()) return;
    LineParser p(doc.source, lineno, std::move(tokens), line.size());
    const Token& head = p.take(Token::kWord, "statement keyword");

    if (head.text == "structor" || head.text == "functional") {
      bool is_structor = head.text == "structor";
      const Token& id = p.take_id(head.text + " id");
      const Token& name = p.take(Token::kQuoted, "quoted display name");
      p.done();
      if (!declared.emplace(id.text, is_structor).second) {
        p.fail(id.column, "duplicate id '" + id.text + "'");
      }
      Entity e{id.text, name.text};
      if (is_structor) {
        doc.statements.push_back({lineno, StructorDecl{std::move(e)}});
      } else {
        doc.statements.push_back({lineno, FunctionalDecl{std::move(e)}});
      }
    } else if (head.text == "provides") {
      const Token& s = p.take_id("structor id");
      const Token& f = p.take_id("functional id");
      p.done();
      auto si = declared.find(s.text);
      if (si == declared.end()) p.fail(s.column, "unknown structor '" + s.text + "'");
      if (!si->second) p.fail(s.column, "'" + s.text + "' is a functional, expected a structor");
      auto fi = declared.find(f.text);
      if (fi == declared.end()) p.fail(f.column, "unknown functional '" + f.text + "'");
      if (fi->second) p.fail(f.column, "'" + f.text + "' is a structor, expected a functional");
      doc.statements.push_back({lineno, ProvidesDecl{s.text, f.text}});
    } else {
      p.fail(head.column, "unknown statement '" + head.text + "'");
    }
  });
  return doc;
}

SystemDesign to_design(const DesignDocument& doc, std::string name) {
  std::vector<Entity> structors;
  std::vector<Entity> functionals;
  std::vector<std::pair<std::string, std::string>> provides;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& st : doc.statements) {
    if (auto* s = std::get_if<StructorDecl>(&st.decl)) {
      structors.push_back(s->entity);
    } else if (auto* f = std::get_if<FunctionalDecl>(&st.decl)) {
      functionals.push_back(f->entity);
    } else {
      const auto& p = std::get<ProvidesDecl>(st.decl);
      if (!seen.emplace(p.structor, p.functional).second) {
        throw ParseError(doc.source, st.line, 1,
                         "duplicate edge " + p.structor + " -> " + p.functional);
      }
      provides.emplace_back(p.structor, p.functional);
    }
  }
  if (structors.empty() || functionals.empty()) {
    std::size_t last = doc.statements.empty() ? 1 : doc.statements.back().line;
    throw ParseError(doc.source, last, 1,
                     "empty design: need at least one structor and one functional");
  }
  return SystemDesign::from_ids(std::move(name), std::move(structors), std::move(functionals),
                                provides);
}

SystemDesign parse_design(std::string_view text, std::string name, std::string source) {
  return to_design(parse_design_document(text, std::move(source)), std::move(name));
}

std::string serialize_design(const SystemDesign& design) {
  std::ostringstream out;
  out << "# " << design.name() << "\n";
  for (const auto& s : design.structors()) {
    out << "structor " << s.id << " \"" << s.display_name << "\"\n";
  }
  for (const auto& f : design.functionals()) {
    out << "functional " << f.id << " \"" << f.display_name << "\"\n";
  }
  for (const auto& e : design.provides()) {
    out << "provides " << design.structors()[e.structor].id << ' '
        << design.functionals()[e.functional].id << '\n';
  }
  return out.str();
}

CircuitDocument parse_circuit(std::string_view text, std::string source) {
  CircuitDocument doc;
  doc.source = std::move(source);
  bool have_qubits = false;
  std::size_t last_line = 1;

  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tokens = tokenize(line, doc.source, lineno);
    if (tokens.empty()) return;
    last_line = lineno;
    LineParser p(doc.source, lineno, std::move(tokens), line.size());
    const Token& head = p.take(Token::kWord, "statement keyword");

    if (head.text == "qubits") {
      if (have_qubits) p.fail(head.column, "duplicate 'qubits' statement");
      std::size_t col = p.column();
      doc.qubits = p.number("qubit count");
      p.done();
      if (doc.qubits == 0) p.fail(col, "qubit count must be positive");
      have_qubits = true;
      return;
    }
    if (!have_qubits) p.fail(head.column, "expected 'qubits <n>' as the first statement");

    if (head.text == "box") {
      CircuitBox box;
      box.line = lineno;
      const Token& id = p.take_id("box id");
      box.id = id.text;
      box.display_name = p.take(Token::kQuoted, "quoted box name").text;
      p.keyword("lines");
      const Token& span = p.take(Token::kWord, "line span <lo>-<hi>");
      auto dash = span.text.find('-');
      if (dash == std::string::npos) {
        box.lo = box.hi = p.to_number(span.text, span.column, "line span <lo>-<hi>");
      } else {
        box.lo = p.to_number(std::string_view(span.text).substr(0, dash), span.column,
                             "line span <lo>-<hi>");
        box.hi = p.to_number(std::string_view(span.text).substr(dash + 1), span.column,
                             "line span <lo>-<hi>");
      }
      if (box.lo > box.hi || box.hi >= doc.qubits) {
        p.fail(span.column, "line span " + span.text + " out of range for " +
                                std::to_string(doc.qubits) + " qubits");
      }
      p.keyword("functional");
      box.functional = p.take(Token::kQuoted, "quoted functional name").text;
      p.done();
      for (const auto& b : doc.boxes) {
        if (b.id == box.id) p.fail(id.column, "duplicate box id '" + box.id + "'");
      }
      doc.boxes.push_back(std::move(box));
    } else if (head.text == "couple") {
      CircuitCoupling c;
      c.line = lineno;
      c.from_box = p.take_id("box id").text;
      c.to_box = p.take_id("box id").text;
      p.keyword("via");
      c.via = p.take(Token::kWord, "functional").text;
      p.done();
      doc.couplings.push_back(std::move(c));
    } else {
      p.fail(head.column, "unknown statement '" + head.text + "'");
    }
  });

  if (!have_qubits) throw ParseError(doc.source, last_line, 1, "missing 'qubits <n>' statement");
  if (doc.boxes.empty()) throw ParseError(doc.source, last_line, 1, "circuit has no boxes");
  for (const auto& c : doc.couplings) {
    for (const auto* id : {&c.from_box, &c.to_box}) {
      bool known = std::any_of(doc.boxes.begin(), doc.boxes.end(),
                               [&](const CircuitBox& b) { return b.id == *id; });
      if (!known) throw ParseError(doc.source, c.line, 1, "coupling references unknown box '" + *id + "'");
    }
  }
  return doc;
}

SystemDesign lower_circuit(const CircuitDocument& doc, std::string name) {
  std::vector<Entity> structors;
  std::vector<Entity> functionals;
  std::vector<ProvidesEdge> edges;
  std::vector<std::size_t> box_functional;
  std::vector<std::string> sequence;

  for (std::size_t b = 0; b < doc.boxes.size(); ++b) {
    const auto& box = doc.boxes[b];
    structors.push_back({"S" + std::to_string(b + 1), box.display_name});
    sequence.push_back(structors.back().id);
    auto it = std::find_if(functionals.begin(), functionals.end(),
                           [&](const Entity& f) { return f.display_name == box.functional; });
    std::size_t f = static_cast<std::size_t>(it - functionals.begin());
    if (it == functionals.end()) functionals.push_back({"F" + std::to_string(f + 1), box.functional});
    box_functional.push_back(f);
    edges.push_back({b, f});
  }

  auto box_index = [&](const std::string& id) {
    auto it = std::find_if(doc.boxes.begin(), doc.boxes.end(),
                           [&](const CircuitBox& b) { return b.id == id; });
    if (it == doc.boxes.end()) throw DesignError("coupling references unknown box '" + id + "'");
    return static_cast<std::size_t>(it - doc.boxes.begin());
  };

  for (const auto& c : doc.couplings) {
    std::size_t a = box_index(c.from_box);
    std::size_t b = box_index(c.to_box);
    const Entity& owned = functionals[box_functional[a]];
    if (c.via != owned.id && c.via != owned.display_name) {
      throw DesignError(doc.source + ":" + std::to_string(c.line) + ": functional '" + c.via +
                        "' is not provided by box '" + c.from_box + "'");
    }
    ProvidesEdge extra{b, box_functional[a]};
    if (std::find(edges.begin(), edges.end(), extra) != edges.end()) {
      throw DesignError(doc.source + ":" + std::to_string(c.line) + ": box '" + c.to_box +
                        "' already provides '" + owned.id + "'");
    }
    edges.push_back(extra);
  }
  return SystemDesign::create(std::move(name), std::move(structors), std::move(functionals),
                              std::move(edges), std::move(sequence));
}

nlohmann::json design_to_json(const SystemDesign& design) {
  auto entities = [](const std::vector<Entity>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : list) arr.push_back({{"id", e.id}, {"name", e.display_name}});
    return arr;
  };
  nlohmann::json j;
  j["name"] = design.name();
  j["structors"] = entities(design.structors());
  j["functionals"] = entities(design.functionals());
  nlohmann::json provides = nlohmann::json::array();
  for (const auto& e : design.provides()) {
    provides.push_back({design.structors()[e.structor].id, design.functionals()[e.functional].id});
  }
  j["provides"] = std::move(provides);
  if (design.sequence()) j["sequence"] = *design.sequence();
  return j;
}

SystemDesign design_from_json(const nlohmann::json& j) {
  try {
    auto entities = [](const nlohmann::json& arr) {
      std::vector<Entity> out;
      for (const auto& e : arr) {
        out.push_back({e.at("id").get<std::string>(), e.value("name", std::string())});
      }
      return out;
    };
    std::vector<std::pair<std::string, std::string>> provides;
    for (const auto& p : j.at("provides")) {
      if (!p.is_array() || p.size() != 2) {
        throw DesignError("provides entries must be [structor, functional] pairs");
      }
      provides.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    std::optional<std::vector<std::string>> sequence;
    if (j.contains("sequence")) sequence = j["sequence"].get<std::vector<std::string>>();
    return SystemDesign::from_ids(j.value("name", std::string("design")),
                                  entities(j.at("structors")), entities(j.at("functionals")),
                                  provides, std::move(sequence));
  } catch (const nlohmann::json::exception& e) {
    throw DesignError(std::string("malformed design JSON: ") + e.what());
  }
}

}  // namespace densmod
