/*
 *   Copyright 2026 The rtk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rtk/theory_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rtk/models.hpp"

namespace rtk {

namespace {

constexpr std::string_view kPunct = "{},=~#[]";

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
  bool word = true;
};

using Line = std::vector<Token>;

struct Section {
  std::string kind;
  std::string name;
  Token header;
  std::vector<Line> lines;
};

[[noreturn]] void fail_at(ErrorKind kind, const Token& t, const std::string& msg) {
  if (kind == ErrorKind::ParseError) throw ParseError(t.line, t.col, msg);
  throw Error(kind, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
}

/// Splits one comment-stripped line into words and punctuation.
Line lex(std::string_view text, int line_no) {
  Line out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({"->", line_no, col, false});
      i += 2;
      continue;
    }
    if (kPunct.find(c) != std::string_view::npos) {
      out.push_back({std::string(1, c), line_no, col, false});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])) == 0 &&
           kPunct.find(text[j]) == std::string_view::npos && !(text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>'))
      ++j;
    out.push_back({std::string(text.substr(i, j - i)), line_no, col, true});
    i = j;
  }
  return out;
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    Line toks = lex(raw, line_no);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!toks.front().word && toks.front().text == "[") {
      const Token open = toks.front();
      std::size_t k = 1;
      std::vector<Token> words;
      while (k < toks.size() && toks[k].word) words.push_back(toks[k++]);
      if (k >= toks.size() || toks[k].text != "]") fail_at(ErrorKind::ParseError, open, "unterminated section header");
      if (k + 1 != toks.size()) fail_at(ErrorKind::ParseError, toks[k + 1], "text after section header");
      if (words.empty()) fail_at(ErrorKind::ParseError, open, "empty section header");
      static const std::set<std::string> named = {"map", "monoid", "lumping", "embedding", "approx", "points", "iso"};
      const std::string& kind = words[0].text;
      if (kind == "states") {
        if (words.size() != 1) fail_at(ErrorKind::ParseError, words[1], "[states] takes no name");
        out.push_back({kind, "", open, {}});
      } else if (named.count(kind) != 0) {
        if (words.size() != 2) fail_at(ErrorKind::ParseError, open, "[" + kind + "] needs exactly one name");
        out.push_back({kind, words[1].text, words[1], {}});
      } else {
        fail_at(ErrorKind::ParseError, words[0], "unknown section '" + kind + "'");
      }
    } else {
      if (out.empty()) fail_at(ErrorKind::ParseError, toks.front(), "content outside a section");
      out.back().lines.push_back(std::move(toks));
    }
    if (end == text.size()) break;
  }
  return out;
}

Line flatten(const Section& s) {
  Line out;
  for (const auto& l : s.lines) out.insert(out.end(), l.begin(), l.end());
  return out;
}

class Cursor {
public:
  explicit Cursor(const Line& toks, Token end) : toks_(toks), end_(std::move(end)) {}
  bool done() const { return i_ >= toks_.size(); }
  const Token& peek() const { return done() ? end_ : toks_[i_]; }
  const Token& next() {
    if (done()) fail_at(ErrorKind::ParseError, end_, "unexpected end of section");
    return toks_[i_++];
  }
  const Token& word(const std::string& what) {
    const Token& t = next();
    if (!t.word) fail_at(ErrorKind::ParseError, t, "expected " + what + ", found '" + t.text + "'");
    return t;
  }
  void expect(const std::string& p) {
    const Token& t = next();
    if (t.word || t.text != p) fail_at(ErrorKind::ParseError, t, "expected '" + p + "', found '" + t.text + "'");
  }
  bool accept(const std::string& p) {
    if (!done() && !toks_[i_].word && toks_[i_].text == p) {
      ++i_;
      return true;
    }
    return false;
  }

private:
  const Line& toks_;
  Token end_;
  std::size_t i_ = 0;
};

std::size_t state_at(const StateSpace& sp, const Token& t) {
  auto i = sp.find(t.text);
  if (!i) fail_at(ErrorKind::UnknownState, t, "unknown state '" + t.text + "'");
  return *i;
}

/// `{a, b}` or `{a b}`; the opening brace is already consumed.
StateMask parse_set(Cursor& c, const StateSpace& sp, const Token& open) {
  StateMask m = 0;
  while (!c.accept("}")) {
    if (c.accept(",")) continue;
    m |= bit(state_at(sp, c.word("a state label")));
  }
  if (m == 0) fail_at(ErrorKind::ParseError, open, "empty image");
  return m;
}

SpecMap parse_map_body(const Section& s, const StateSpace& sp) {
  const Line toks = flatten(s);
  Cursor c(toks, s.header);
  std::vector<StateMask> table(sp.size(), 0);
  while (!c.done()) {
    const Token& from = c.word("a state label");
    const std::size_t i = state_at(sp, from);
    if (table[i] != 0) fail_at(ErrorKind::ParseError, from, "state '" + from.text + "' mapped twice");
    c.expect("->");
    const Token& t = c.next();
    if (!t.word && t.text == "{") {
      table[i] = parse_set(c, sp, t);
    } else if (t.word) {
      table[i] = bit(state_at(sp, t));
    } else {
      fail_at(ErrorKind::ParseError, t, "expected an image, found '" + t.text + "'");
    }
  }
  for (std::size_t i = 0; i < sp.size(); ++i)
    if (table[i] == 0) fail_at(ErrorKind::ParseError, s.header, "state '" + sp.label(i) + "' has no image");
  return {sp, sp, std::move(table)};
}

SpecMap parse_classes(const Section& s, const StateSpace& sp) {
  const Line toks = flatten(s);
  Cursor c(toks, s.header);
  c.word("classes");
  std::vector<StateMask> table(sp.size(), 0);
  StateMask seen = 0;
  while (!c.done()) {
    const Token open = c.next();
    if (open.word || open.text != "{") fail_at(ErrorKind::ParseError, open, "expected '{'");
    const StateMask m = parse_set(c, sp, open);
    if ((m & seen) != 0) fail_at(ErrorKind::ParseError, open, "classes overlap at " + sp.format(m & seen));
    seen |= m;
    for_each_bit(m, [&](std::size_t i) { table[i] = m; });
  }
  for (std::size_t i = 0; i < sp.size(); ++i)
    if (table[i] == 0) fail_at(ErrorKind::ParseError, s.header, "state '" + sp.label(i) + "' is in no class");
  return {sp, sp, std::move(table)};
}

std::string image_text(const StateSpace& sp, StateMask m) {
  if (popcount(m) == 1) {
    std::string out;
    for_each_bit(m, [&](std::size_t i) { out = sp.label(i); });
    return out;
  }
  return sp.format(m);
}

std::string table_name(const SpecMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i != 0) s += ',';
    s += image_text(f.target(), f.image(i));
  }
  return s + "]";
}

template <typename T>
const T* find_named(const std::vector<T>& v, const std::string& name) {
  for (const auto& x : v)
    if (x.name == name) return &x;
  return nullptr;
}

} // namespace

const StateSpace& TheoryFile::space() const {
  if (!states) fail(ErrorKind::UnknownReference, "the file declares no [states]");
  return *states;
}

bool TheoryFile::has_map(const std::string& name) const {
  return name == "id" || find_named(maps, name) != nullptr || find_named(lumpings, name) != nullptr;
}
bool TheoryFile::has_monoid(const std::string& name) const { return find_named(monoids, name) != nullptr; }

SpecMap TheoryFile::map(const std::string& name) const {
  if (name == "id") return SpecMap::identity(space());
  if (const auto* m = find_named(maps, name)) return m->map;
  if (const auto* m = find_named(lumpings, name)) return m->map;
  fail(ErrorKind::UnknownReference, "no map named '" + name + "'");
}

std::pair<std::vector<SpecMap>, std::vector<std::string>> TheoryFile::generators(const std::string& monoid) const {
  const auto* def = find_named(monoids, monoid);
  if (def == nullptr) fail(ErrorKind::UnknownReference, "no monoid named '" + monoid + "'");
  std::pair<std::vector<SpecMap>, std::vector<std::string>> out;
  for (const auto& g : def->generators) {
    if (g == "@all-deterministic" || g == "@all-permutations") {
      const auto ms = g == "@all-deterministic" ? models::all_deterministic_maps(space()) : models::all_permutations(space());
      for (const auto& f : ms) {
        out.first.push_back(f);
        out.second.push_back(table_name(f));
      }
    } else if (has_monoid(g)) {
      auto [fs, ns] = generators(g);
      out.first.insert(out.first.end(), fs.begin(), fs.end());
      out.second.insert(out.second.end(), ns.begin(), ns.end());
    } else {
      out.first.push_back(map(g));
      out.second.push_back(g);
    }
  }
  return out;
}

TransformationMonoid TheoryFile::monoid(const std::string& name) const {
  const auto* def = find_named(monoids, name);
  if (def == nullptr) fail(ErrorKind::UnknownReference, "no monoid named '" + name + "'");
  auto [gens, names] = generators(name);
  return close_monoid(space(), gens, def->cap.value_or(default_monoid_cap()), names);
}

const SpecMap& TheoryFile::embedding(const std::string& name) const {
  if (const auto* e = find_named(embeddings, name)) return e->map;
  fail(ErrorKind::UnknownReference, "no embedding named '" + name + "'");
}

Lumping TheoryFile::lumping(const std::string& name) const {
  if (const auto* l = find_named(lumpings, name)) return Lumping(l->map);
  fail(ErrorKind::UnknownReference, "no lumping named '" + name + "'");
}

ApproximationStructure TheoryFile::approximation(const std::string& name) const {
  const auto* d = find_named(approximations, name);
  if (d == nullptr) fail(ErrorKind::UnknownReference, "no approximation structure named '" + name + "'");
  auto order = d->order;
  if (order.empty())
    for (std::size_t i = 1; i < d->index.size(); ++i) order.emplace_back(d->index[i - 1], d->index[i]);
  ApproxIndex ix(d->index, order, d->max, d->zero);
  for (const auto& c : d->chains) ix.add_chain(c.members, c.sums);
  std::vector<SpecMap> fam;
  for (const auto& m : d->maps) fam.push_back(map(m));
  return {std::move(ix), std::move(fam)};
}

const PointSpec& TheoryFile::points(const std::string& name) const {
  if (const auto* p = find_named(point_sets, name)) return p->points;
  fail(ErrorKind::UnknownReference, "no point set named '" + name + "'");
}

SubsystemIso TheoryFile::iso(const std::string& name) const {
  const auto* d = find_named(isos, name);
  if (d == nullptr) fail(ErrorKind::UnknownReference, "no isomorphism named '" + name + "'");
  SubsystemIso out;
  for (const auto& [a, b] : d->pairs) out.emplace_back(map(a), map(b));
  return out;
}

Specification TheoryFile::spec(std::string_view labels) const {
  std::vector<std::string> names;
  std::istringstream in{std::string(labels)};
  for (std::string w; in >> w;) names.push_back(w);
  if (names.empty()) fail(ErrorKind::EmptySpecification, "no states given");
  return make_spec(space(), names);
}

bool operator==(const TheoryFile& a, const TheoryFile& b) {
  return a.states == b.states && a.maps == b.maps && a.monoids == b.monoids && a.lumpings == b.lumpings &&
         a.embeddings == b.embeddings &&
         a.approximations == b.approximations && a.point_sets == b.point_sets && a.isos == b.isos;
}

TheoryFile parse_theory(std::string_view text) {
  TheoryFile m;
  std::set<std::string> names;
  auto claim = [&](const Section& s) {
    if (s.name == "id" || !names.insert(s.name).second)
      fail_at(ErrorKind::DuplicateName, s.header, "name '" + s.name + "' is already defined");
  };
  auto need_states = [&](const Section& s) -> const StateSpace& {
    if (!m.states) fail_at(ErrorKind::ParseError, s.header, "[" + s.kind + "] before [states]");
    return *m.states;
  };
  auto need_map = [&](const Token& t) {
    if (!m.has_map(t.text)) fail_at(ErrorKind::UnknownReference, t, "no map named '" + t.text + "'");
  };

  for (const Section& s : split_sections(text)) {
    if (s.kind == "states") {
      if (m.states) fail_at(ErrorKind::DuplicateName, s.header, "[states] declared twice");
      std::vector<std::string> labels;
      for (const auto& l : s.lines)
        for (const auto& t : l) {
          if (!t.word) fail_at(ErrorKind::ParseError, t, "unexpected '" + t.text + "' in [states]");
          if (std::find(labels.begin(), labels.end(), t.text) != labels.end())
            fail_at(ErrorKind::DuplicateState, t, "state '" + t.text + "' listed twice");
          labels.push_back(t.text);
        }
      if (labels.empty()) fail_at(ErrorKind::ParseError, s.header, "[states] lists no states");
      if (labels.size() > kMaxStates) fail_at(ErrorKind::TooManyStates, s.header, "more than 64 states");
      m.states.emplace(std::move(labels));
      continue;
    }
    claim(s);
    if (s.kind == "points") {
      std::vector<RationalPoint> pts;
      for (const auto& l : s.lines) {
        std::vector<Rational> coords;
        for (const auto& t : l) {
          if (!t.word) fail_at(ErrorKind::ParseError, t, "unexpected '" + t.text + "' in [points]");
          try {
            coords.push_back(parse_rational(t.text));
          } catch (const Error&) {
            fail_at(ErrorKind::ParseError, t, "'" + t.text + "' is not a rational number");
          }
        }
        if (!pts.empty() && coords.size() != pts.front().dim())
          fail_at(ErrorKind::DimMismatch, l.front(), "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                                         std::to_string(pts.front().dim()));
        pts.emplace_back(std::move(coords));
      }
      if (pts.empty()) fail_at(ErrorKind::EmptySpecification, s.header, "[points] lists no points");
      m.point_sets.push_back({s.name, PointSpec(std::move(pts))});
      continue;
    }
    const StateSpace& sp = need_states(s);
    if (s.kind == "map") {
      m.maps.push_back({s.name, parse_map_body(s, sp)});
    } else if (s.kind == "lumping") {
      const bool classes = !s.lines.empty() && s.lines.front().front().word && s.lines.front().front().text == "classes";
      SpecMap f = classes ? parse_classes(s, sp) : parse_map_body(s, sp);
      try {
        Lumping check(f);
      } catch (const Error& e) {
        fail_at(e.kind(), s.header, e.what());
      }
      m.lumpings.push_back({s.name, std::move(f)});
    } else if (s.kind == "embedding") {
      const Line toks = flatten(s);
      Cursor c(toks, s.header);
      std::vector<std::string> labels;
      std::vector<StateMask> table;
      while (!c.done()) {
        const Token& from = c.word("a source label");
        if (std::find(labels.begin(), labels.end(), from.text) != labels.end())
          fail_at(ErrorKind::ParseError, from, "source state '" + from.text + "' mapped twice");
        c.expect("->");
        const Token& t = c.next();
        if (!t.word && t.text == "{") {
          table.push_back(parse_set(c, sp, t));
        } else if (t.word) {
          table.push_back(bit(state_at(sp, t)));
        } else {
          fail_at(ErrorKind::ParseError, t, "expected an image, found '" + t.text + "'");
        }
        labels.push_back(from.text);
      }
      if (labels.empty()) fail_at(ErrorKind::ParseError, s.header, "[embedding] maps no states");
      m.embeddings.push_back({s.name, SpecMap(StateSpace(std::move(labels)), sp, std::move(table))});
    } else if (s.kind == "monoid") {
      MonoidDef d{s.name, {}, std::nullopt};
      for (const auto& l : s.lines) {
        if (l.front().word && l.front().text == "cap") {
          if (l.size() != 2 || !l[1].word) fail_at(ErrorKind::ParseError, l.front(), "expected 'cap N'");
          std::size_t n = 0;
          const auto& txt = l[1].text;
          if (txt.empty() || !std::all_of(txt.begin(), txt.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }) ||
              txt.size() > 12 || (n = std::stoull(txt)) == 0)
            fail_at(ErrorKind::ParseError, l[1], "cap must be a positive integer");
          if (d.cap) fail_at(ErrorKind::ParseError, l.front(), "cap given twice");
          d.cap = n;
          continue;
        }
        for (const auto& t : l) {
          if (!t.word) {
            if (t.text == ",") continue;
            fail_at(ErrorKind::ParseError, t, "unexpected '" + t.text + "' in [monoid]");
          }
          if (t.text.front() == '@') {
            if (t.text != "@all-deterministic" && t.text != "@all-permutations")
              fail_at(ErrorKind::ParseError, t, "unknown generator family '" + t.text + "'");
          } else if (!m.has_monoid(t.text)) {
            need_map(t);
          }
          d.generators.push_back(t.text);
        }
      }
      m.monoids.push_back(std::move(d));
    } else if (s.kind == "approx") {
      ApproxDef d;
      d.name = s.name;
      std::vector<std::optional<std::string>> at;
      auto in_index = [&](const Token& t) {
        if (std::find(d.index.begin(), d.index.end(), t.text) == d.index.end())
          fail_at(ErrorKind::UnknownIndex, t, "no index element '" + t.text + "'");
        return static_cast<std::size_t>(std::find(d.index.begin(), d.index.end(), t.text) - d.index.begin());
      };
      for (const auto& l : s.lines) {
        Cursor c(l, l.front());
        const Token& key = c.word("a keyword");
        if (key.text == "index") {
          if (!d.index.empty()) fail_at(ErrorKind::ParseError, key, "index given twice");
          while (!c.done()) {
            const Token& t = c.word("an index label");
            if (std::find(d.index.begin(), d.index.end(), t.text) != d.index.end())
              fail_at(ErrorKind::BadIndex, t, "index element '" + t.text + "' listed twice");
            d.index.push_back(t.text);
          }
          at.assign(d.index.size(), std::nullopt);
          continue;
        }
        if (d.index.empty()) fail_at(ErrorKind::ParseError, key, "'index' must come first");
        if (key.text == "order") {
          const Token& a = c.word("an index label");
          const Token& b = c.word("an index label");
          in_index(a);
          in_index(b);
          d.order.emplace_back(a.text, b.text);
        } else if (key.text == "max" || key.text == "zero") {
          const Token& a = c.word("an index label");
          in_index(a);
          if (key.text == "max") d.max = a.text;
          else d.zero = a.text;
        } else if (key.text == "at") {
          const Token& e = c.word("an index label");
          const Token& f = c.word("a map name");
          const std::size_t i = in_index(e);
          need_map(f);
          if (at[i]) fail_at(ErrorKind::ParseError, e, "map for '" + e.text + "' given twice");
          at[i] = f.text;
        } else if (key.text == "chain") {
          ApproxDef::ChainDef ch;
          while (!c.done()) {
            const Token& t = c.word("an index label");
            in_index(t);
            ch.members.push_back(t.text);
          }
          d.chains.push_back(std::move(ch));
        } else if (key.text == "sum") {
          if (d.chains.empty()) fail_at(ErrorKind::ParseError, key, "'sum' before any 'chain'");
          const Token& a = c.word("an index label");
          const Token& b = c.word("an index label");
          c.expect("=");
          const Token& r = c.word("an index label");
          in_index(a);
          in_index(b);
          in_index(r);
          d.chains.back().sums.emplace_back(a.text, b.text, r.text);
        } else {
          fail_at(ErrorKind::ParseError, key, "unknown keyword '" + key.text + "' in [approx]");
        }
        if (!c.done()) fail_at(ErrorKind::ParseError, c.peek(), "unexpected '" + c.peek().text + "'");
      }
      if (d.index.empty()) fail_at(ErrorKind::ParseError, s.header, "[approx] without an index");
      if (d.max.empty()) d.max = d.index.back();
      for (std::size_t i = 0; i < at.size(); ++i) {
        if (!at[i]) fail_at(ErrorKind::ParseError, s.header, "no map for index element '" + d.index[i] + "'");
        d.maps.push_back(*at[i]);
      }
      m.approximations.push_back(std::move(d));
      try {
        (void)m.approximation(s.name);
      } catch (const Error& e) {
        fail_at(e.kind(), s.header, e.what());
      }
    } else if (s.kind == "iso") {
      IsoDef d{s.name, {}};
      const Line toks = flatten(s);
      Cursor c(toks, s.header);
      while (!c.done()) {
        const Token& a = c.word("a map name");
        c.expect("~");
        const Token& b = c.word("a map name");
        need_map(a);
        need_map(b);
        d.pairs.emplace_back(a.text, b.text);
      }
      m.isos.push_back(std::move(d));
    }
  }
  return m;
}

std::string print_theory(const TheoryFile& m) {
  std::ostringstream out;
  bool first = true;
  auto header = [&](const std::string& h) {
    out << (first ? "" : "\n") << h << "\n";
    first = false;
  };
  for (const auto& p : m.point_sets) {
    header("[points " + p.name + "]");
    out << format_points(p.points);
  }
  if (!m.states) return out.str();
  const StateSpace& sp = *m.states;
  header("[states]");
  for (std::size_t i = 0; i < sp.size(); ++i) out << (i == 0 ? "" : " ") << sp.label(i);
  out << "\n";
  auto entries = [&](const SpecMap& f) {
    for (std::size_t i = 0; i < sp.size(); ++i) out << (i == 0 ? "" : " ") << sp.label(i) << "->" << image_text(sp, f.image(i));
    out << "\n";
  };
  for (const auto& f : m.maps) {
    out << "\n[map " << f.name << "]\n";
    entries(f.map);
  }
  for (const auto& f : m.lumpings) {
    out << "\n[lumping " << f.name << "]\n";
    entries(f.map);
  }
  for (const auto& e : m.embeddings) {
    out << "\n[embedding " << e.name << "]\n";
    const auto& src = e.map.source();
    for (std::size_t i = 0; i < src.size(); ++i)
      out << (i == 0 ? "" : " ") << src.label(i) << "->" << image_text(sp, e.map.image(i));
    out << "\n";
  }
  for (const auto& d : m.monoids) {
    out << "\n[monoid " << d.name << "]\n";
    if (d.cap) out << "cap " << *d.cap << "\n";
    for (std::size_t i = 0; i < d.generators.size(); ++i) out << (i == 0 ? "" : " ") << d.generators[i];
    if (!d.generators.empty()) out << "\n";
  }
  for (const auto& d : m.approximations) {
    out << "\n[approx " << d.name << "]\nindex";
    for (const auto& l : d.index) out << " " << l;
    out << "\n";
    for (const auto& [a, b] : d.order) out << "order " << a << " " << b << "\n";
    out << "max " << d.max << "\n";
    if (d.zero) out << "zero " << *d.zero << "\n";
    for (std::size_t i = 0; i < d.index.size(); ++i) out << "at " << d.index[i] << " " << d.maps[i] << "\n";
    for (const auto& c : d.chains) {
      out << "chain";
      for (const auto& x : c.members) out << " " << x;
      out << "\n";
      for (const auto& [a, b, r] : c.sums) out << "sum " << a << " " << b << " = " << r << "\n";
    }
  }
  for (const auto& d : m.isos) {
    out << "\n[iso " << d.name << "]\n";
    for (const auto& [a, b] : d.pairs) out << a << " ~ " << b << "\n";
  }
  return out.str();
}

std::string export_dot(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq,
                       const std::string& graph_name) {
  const std::size_t n = labels.size();
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::string esc;
    for (char c : labels[i]) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    out << "  n" << i << " [label=\"" << esc << "\"];\n";
  }
  std::vector<ElementSet> above(n, ElementSet(n)), below(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j] && !leq[j][i]) {
        above[i].insert(j);
        below[j].insert(i);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : above[i].indices())
      if ((above[i] & below[j]).empty()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace rtk
