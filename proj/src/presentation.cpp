#include "tensoria/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <unordered_map>

#include "tensoria/errors.hpp"

namespace tensoria {

  Word Word::generator(std::uint32_t gen, std::int64_t exp) {
    Word w;
    w.push({gen, exp});
    return w;
  }

  Word Word::from_letters(std::vector<letter_type> const& letters) {
    Word w;
    for (auto l : letters) {
      w.push({letter_generator(l), (l & 1U) ? -1 : 1});
    }
    return w;
  }

  std::vector<letter_type> Word::letters() const {
    std::vector<letter_type> out;
    out.reserve(length());
    for (auto const& s : _syl) {
      auto l = make_letter(s.gen, s.exp < 0);
      for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) {
        out.push_back(l);
      }
    }
    return out;
  }

  std::size_t Word::length() const noexcept {
    std::size_t n = 0;
    for (auto const& s : _syl) {
      n += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
    }
    return n;
  }

  void Word::push(Syllable s) {
    if (s.exp == 0) {
      return;
    }
    if (!_syl.empty() && _syl.back().gen == s.gen) {
      _syl.back().exp += s.exp;
      if (_syl.back().exp == 0) {
        _syl.pop_back();
      }
    } else {
      _syl.push_back(s);
    }
  }

  Word Word::inverse() const {
    Word w;
    w._syl.reserve(_syl.size());
    for (auto it = _syl.rbegin(); it != _syl.rend(); ++it) {
      w._syl.push_back({it->gen, -it->exp});
    }
    return w;
  }

  Word Word::pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    if (k < 0) {
      k = -k;
    }
    Word result;
    if (base._syl.size() == 1) {
      result.push({base._syl[0].gen, base._syl[0].exp * k});
      return result;
    }
    for (std::int64_t i = 0; i < k; ++i) {
      result *= base;
    }
    return result;
  }

  Word Word::cyclically_reduced() const {
    Word w = *this;
    while (w._syl.size() > 1 && w._syl.front().gen == w._syl.back().gen) {
      auto e = w._syl.back().exp;
      w._syl.pop_back();
      w._syl.front().exp += e;
      if (w._syl.front().exp == 0) {
        w._syl.erase(w._syl.begin());
      }
    }
    return w;
  }

  Word& Word::operator*=(Word const& other) {
    for (auto const& s : other._syl) {
      push(s);
    }
    return *this;
  }

  bool Word::operator<(Word const& other) const {
    if (length() != other.length()) {
      return length() < other.length();
    }
    return letters() < other.letters();
  }

  std::uint32_t Word::generator_bound() const noexcept {
    std::uint32_t b = 0;
    for (auto const& s : _syl) {
      b = std::max(b, s.gen + 1);
    }
    return b;
  }

  Word Word::relabel(std::vector<std::uint32_t> const& map) const {
    Word w;
    for (auto const& s : _syl) {
      w.push({map.at(s.gen), s.exp});
    }
    return w;
  }

  Word commutator(Word const& a, Word const& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  Word conjugate(Word const& a, Word const& b) {
    return b.inverse() * a * b;
  }

  std::vector<letter_type> canonical_relator(Word const& w) {
    auto r = w.cyclically_reduced();
    std::vector<letter_type> best;
    for (auto const& cand : {r.letters(), r.inverse().letters()}) {
      for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<letter_type> rot(cand.begin() + i, cand.end());
        rot.insert(rot.end(), cand.begin(), cand.begin() + i);
        if (best.empty() || rot < best) {
          best = std::move(rot);
        }
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class Parser {
     public:
      Parser(std::string_view text, std::size_t base)
          : _s(text), _pos(0), _base(base) {}

      void set_names(std::vector<std::string> const& names) {
        _index.clear();
        for (std::size_t i = 0; i < names.size(); ++i) {
          _index.emplace(names[i], static_cast<std::uint32_t>(i));
        }
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _base + _pos);
      }

      void skip_ws() {
        while (_pos < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }

      bool at_end() {
        skip_ws();
        return _pos >= _s.size();
      }

      char peek() {
        skip_ws();
        return _pos < _s.size() ? _s[_pos] : '\0';
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      std::string ident() {
        skip_ws();
        if (_pos >= _s.size() || !is_ident_start(_s[_pos])) {
          fail("expected generator name");
        }
        auto start = _pos;
        while (_pos < _s.size() && is_ident_char(_s[_pos])) {
          ++_pos;
        }
        return std::string(_s.substr(start, _pos - start));
      }

      std::int64_t integer() {
        skip_ws();
        bool neg = false;
        if (_pos < _s.size() && (_s[_pos] == '-' || _s[_pos] == '+')) {
          neg = _s[_pos] == '-';
          ++_pos;
          skip_ws();
        }
        if (_pos >= _s.size()
            || !std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
          fail("expected integer exponent");
        }
        auto         start = _pos;
        std::int64_t v     = 0;
        while (_pos < _s.size()
               && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
          if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
            _pos = start;
            fail("exponent out of range");
          }
          v = 10 * v + (_s[_pos] - '0');
          ++_pos;
        }
        if (v == 0) {
          _pos = start;
          fail("zero exponent");
        }
        return neg ? -v : v;
      }

      bool factor_starts(char c) const {
        return is_ident_start(c) || c == '(' || c == '[' || c == '1';
      }

      Word word() {
        Word w;
        bool first = true;
        while (true) {
          char c = peek();
          if (!first && c == '*') {
            ++_pos;
            c = peek();
            if (!factor_starts(c)) {
              fail("expected factor after '*'");
            }
          }
          if (!factor_starts(c)) {
            if (first) {
              fail("expected word");
            }
            return w;
          }
          w *= factor();
          first = false;
        }
      }

      // A relator is a word, or an equation u = v meaning u v^-1.
      Word relator() {
        Word w = word();
        if (peek() == '=') {
          ++_pos;
          w *= word().inverse();
        }
        return w;
      }

      Word factor() {
        Word a = atom();
        while (true) {
          char c = peek();
          if (c == '^') {
            ++_pos;
            a = a.pow(integer());
          } else if (c == '\'') {
            ++_pos;
            a = a.inverse();
          } else {
            return a;
          }
        }
      }

      Word atom() {
        char c = peek();
        if (c == '(') {
          ++_pos;
          Word w = word();
          expect(')');
          return w;
        }
        if (c == '[') {
          ++_pos;
          Word w = word();
          if (peek() != ',') {
            fail("commutator needs at least two entries");
          }
          while (peek() == ',') {
            ++_pos;
            w = commutator(w, word());
          }
          expect(']');
          return w;
        }
        if (c == '1') {
          auto save = _pos;
          ++_pos;
          if (_pos < _s.size() && is_ident_char(_s[_pos])) {
            _pos = save;
            fail("unexpected digit");
          }
          return Word();
        }
        auto start = _pos;
        auto name  = ident();
        auto it    = _index.find(name);
        if (it == _index.end()) {
          _pos = start;
          fail("unknown generator '" + name + "'");
        }
        return Word::generator(it->second);
      }

      Presentation presentation() {
        expect('<');
        std::vector<std::string> names;
        if (peek() != '|') {
          while (true) {
            auto start = _pos;
            skip_ws();
            start     = _pos;
            auto name = ident();
            if (std::find(names.begin(), names.end(), name) != names.end()) {
              _pos = start;
              fail("duplicate generator '" + name + "'");
            }
            names.push_back(std::move(name));
            if (peek() == ',') {
              ++_pos;
              continue;
            }
            break;
          }
        }
        expect('|');
        set_names(names);
        std::vector<Word> rels;
        if (peek() != '>') {
          while (true) {
            rels.push_back(relator());
            if (peek() == ',') {
              ++_pos;
              continue;
            }
            break;
          }
        }
        expect('>');
        return Presentation(std::move(names), std::move(rels));
      }

      std::size_t pos() const {
        return _pos;
      }

     private:
      std::string_view                                _s;
      std::size_t                                     _pos;
      std::size_t                                     _base;
      std::unordered_map<std::string, std::uint32_t>  _index;
    };
  }  // namespace

  Presentation::Presentation(std::vector<std::string> names,
                             std::vector<Word>        relators)
      : _names(std::move(names)), _relators() {
    std::set<std::string> seen;
    for (auto const& n : _names) {
      if (n.empty() || !is_ident_start(n[0])
          || !std::all_of(n.begin(), n.end(), is_ident_char)) {
        throw InputError("invalid generator name '" + n + "'");
      }
      if (!seen.insert(n).second) {
        throw InputError("duplicate generator '" + n + "'");
      }
    }
    for (auto& r : relators) {
      add_relator(std::move(r));
    }
  }

  void Presentation::add_relator(Word w) {
    if (w.generator_bound() > _names.size()) {
      throw InputError("relator uses an undeclared generator");
    }
    _relators.push_back(std::move(w));
  }

  void Presentation::deduplicate() {
    std::set<std::vector<letter_type>> seen;
    std::vector<Word>                  kept;
    for (auto& r : _relators) {
      auto key = canonical_relator(r);
      if (key.empty() || !seen.insert(key).second) {
        continue;
      }
      kept.push_back(std::move(r));
    }
    _relators = std::move(kept);
  }

  std::string Presentation::word_to_string(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w.syllables()) {
      if (!out.empty()) {
        out += '*';
      }
      out += _names.at(s.gen);
      if (s.exp != 1) {
        out += '^';
        out += std::to_string(s.exp);
      }
    }
    return out;
  }

  std::string Presentation::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < _names.size(); ++i) {
      out += (i ? "," : "") + _names[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < _relators.size(); ++i) {
      out += (i ? ", " : "") + word_to_string(_relators[i]);
    }
    out += ">";
    return out;
  }

  Word Presentation::parse_word(std::string_view text) const {
    Parser p(text, 0);
    p.set_names(_names);
    if (p.at_end()) {
      return Word();
    }
    Word w = p.word();
    if (!p.at_end()) {
      p.fail("trailing characters");
    }
    return w;
  }

  std::int64_t Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return static_cast<std::int64_t>(i);
      }
    }
    return -1;
  }

  Presentation parse_presentation(std::string_view text) {
    Parser p(text, 0);
    auto   pres = p.presentation();
    if (!p.at_end()) {
      p.fail("trailing characters");
    }
    return pres;
  }

  std::vector<NamedPresentation> parse_corpus(std::string_view text) {
    std::vector<NamedPresentation> out;
    std::set<std::string>          names;
    std::size_t                    line_start = 0;
    while (line_start <= text.size()) {
      auto end = text.find('\n', line_start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(line_start, end - line_start);
      auto hash = line.find('#');
      if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      Parser p(line, line_start);
      if (!p.at_end()) {
        Parser q(line, line_start);
        auto   name = q.ident();
        q.expect('=');
        auto rest_off = q.pos();
        Parser r(line.substr(rest_off), line_start + rest_off);
        auto   pres = r.presentation();
        if (!r.at_end()) {
          r.fail("trailing characters");
        }
        if (!names.insert(name).second) {
          throw ParseError("duplicate corpus entry '" + name + "'",
                           line_start);
        }
        out.push_back({std::move(name), std::move(pres)});
      }
      if (end == text.size()) {
        break;
      }
      line_start = end + 1;
    }
    return out;
  }

}  // namespace tensoria
