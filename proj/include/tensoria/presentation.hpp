#ifndef TENSORIA_PRESENTATION_HPP_
#define TENSORIA_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tensoria {

  // Letters encode a generator and a sign: 2*g for g, 2*g+1 for g^-1.
  using letter_type = std::uint32_t;

  constexpr letter_type make_letter(std::uint32_t gen, bool inverse) noexcept {
    return 2 * gen + (inverse ? 1 : 0);
  }
  constexpr letter_type inverse_letter(letter_type l) noexcept {
    return l ^ 1U;
  }
  constexpr std::uint32_t letter_generator(letter_type l) noexcept {
    return l >> 1;
  }

  // Freely reduced word over generator indices, stored as syllables x^k.
  class Word {
   public:
    struct Syllable {
      std::uint32_t gen;
      std::int64_t  exp;
      bool operator==(Syllable const&) const = default;
    };

    Word() = default;

    static Word generator(std::uint32_t gen, std::int64_t exp = 1);
    static Word from_letters(std::vector<letter_type> const& letters);

    std::vector<Syllable> const& syllables() const noexcept {
      return _syl;
    }
    std::vector<letter_type> letters() const;

    bool empty() const noexcept {
      return _syl.empty();
    }
    // Number of letters.
    std::size_t length() const noexcept;

    Word inverse() const;
    Word pow(std::int64_t k) const;
    // Cyclic reduction, used to normalise relators.
    Word cyclically_reduced() const;

    Word& operator*=(Word const& other);
    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }
    bool operator==(Word const&) const = default;
    bool operator<(Word const& other) const;

    // Largest generator index used plus one.
    std::uint32_t generator_bound() const noexcept;

    // Rename generators: g -> map[g].
    Word relabel(std::vector<std::uint32_t> const& map) const;

   private:
    void push(Syllable s);
    std::vector<Syllable> _syl;
  };

  // [a,b] = a^-1 b^-1 a b
  Word commutator(Word const& a, Word const& b);
  // a^b = b^-1 a b
  Word conjugate(Word const& a, Word const& b);

  // Canonical representative of a relator up to cyclic permutation and
  // inversion; used to deduplicate relator lists.
  std::vector<letter_type> canonical_relator(Word const& w);

  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> names, std::vector<Word> relators);

    std::size_t num_generators() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    void add_relator(Word w);
    // Drops trivial and duplicate relators (up to rotation and inversion).
    void deduplicate();

    std::string to_string() const;
    std::string word_to_string(Word const& w) const;
    // Parse a word over this presentation's generator names.
    Word parse_word(std::string_view text) const;
    // Index of a generator name, or -1.
    std::int64_t generator_index(std::string_view name) const;

   private:
    std::vector<std::string> _names;
    std::vector<Word>        _relators;
  };

  Presentation parse_presentation(std::string_view text);

  struct NamedPresentation {
    std::string  name;
    Presentation presentation;
  };

  // Corpus files: one `name = <gens | rels>` per line, `#` starts a comment.
  std::vector<NamedPresentation> parse_corpus(std::string_view text);

}  // namespace tensoria

#endif  // TENSORIA_PRESENTATION_HPP_
