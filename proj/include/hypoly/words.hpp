#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypoly/lorentz.hpp"

namespace hypoly {

/// One token of a generator word; `inverse` marks a trailing "^-1".
struct WordToken {
  std::string name;
  bool inverse = false;
  bool operator==(const WordToken&) const = default;
};

/// A word over named generators, leftmost token applied last (composition order).
using Word = std::vector<WordToken>;

/// Parses tokens of the form "g" or "g^-1".
Word parse_word(const std::vector<std::string>& tokens);

std::vector<std::string> word_tokens(const Word& w);

/// A dictionary of named compiled isometries. Side reflections are
/// conventionally registered under "inv:<side name>".
class GeneratorSet {
 public:
  explicit GeneratorSet(int dimension) : n_(dimension) {}

  int dimension() const { return n_; }

  void define(const std::string& name, LorentzMap g);
  bool has(const std::string& name) const { return gens_.count(name) != 0; }
  const LorentzMap& get(const std::string& name) const;

  /// Compiles a word to its matrix; every map is form-checked on definition,
  /// so the product is an isometry by construction.
  LorentzMap compile(const Word& w) const;

  std::vector<std::string> names() const;

 private:
  int n_;
  std::map<std::string, LorentzMap> gens_;
};

}  // namespace hypoly
