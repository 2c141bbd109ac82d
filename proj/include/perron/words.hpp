#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perron/errors.hpp"

namespace perron {

using Symbol = int;

// A finite word over the alphabet {0, ..., q-1}.  Plain value type; range
// checks against a concrete alphabet happen in validate_spec.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {}

    static Word from_digits(const std::string& digits);

    int size() const { return static_cast<int>(syms_.size()); }
    bool empty() const { return syms_.empty(); }
    Symbol operator[](int i) const { return syms_[static_cast<size_t>(i)]; }
    const std::vector<Symbol>& symbols() const { return syms_; }

    Word prefix(int n) const;
    Word suffix(int n) const;
    // The word with its first symbol removed.
    Word drop_first() const;
    Word reversed() const;
    Word append(Symbol s) const;
    Word concat(const Word& other) const;

    bool starts_with(const Word& w) const;
    bool ends_with(const Word& w) const;
    // True iff `w` occurs as a contiguous factor of *this.
    bool contains_factor(const Word& w) const;

    bool operator==(const Word& o) const { return syms_ == o.syms_; }
    bool operator!=(const Word& o) const { return syms_ != o.syms_; }
    bool operator<(const Word& o) const { return syms_ < o.syms_; }  // lexicographic, same-length use

    // Digit string for q <= 10, otherwise comma-separated in brackets.
    std::string str() const;

private:
    std::vector<Symbol> syms_;
};

// A validated subshift description: alphabet size q and a reduced collection
// of forbidden words.  p is the length of the longest forbidden word, with
// p = 2 for the full shift (empty collection).
struct ShiftSpec {
    int q = 0;
    std::vector<Word> forbidden;
    int p = 2;

    int s() const { return static_cast<int>(forbidden.size()); }
    bool full_shift() const { return forbidden.empty(); }
};

// (0,1) transition matrix over the lexicographically sorted allowed
// (p-1)-words; entry (x, y) = 1 iff x and y overlap progressively and the
// extension x . last(y) avoids every forbidden factor.
struct AdjacencyMatrix {
    std::vector<Word> labels;
    std::vector<std::vector<int>> entries;

    int size() const { return static_cast<int>(labels.size()); }
    // Index of a label word, -1 if absent.
    int index_of(const Word& w) const;
};

struct GraphAnalysis {
    bool irreducible = false;
    int period = 1;
    bool primitive = false;
};

// Validates q and the forbidden collection: symbols in range, no
// length-1 words, pairwise distinct, reduced (no word a factor of another).
ShiftSpec validate_spec(int q, std::vector<Word> forbidden);

// True iff some forbidden word of `spec` occurs as a factor of w.
bool contains_forbidden(const ShiftSpec& spec, const Word& w);

// All length-n words with no forbidden factor, lexicographically sorted.
// n = 0 yields the single empty word.
std::vector<Word> enumerate_allowed_words(const ShiftSpec& spec, int n);

AdjacencyMatrix build_adjacency(const ShiftSpec& spec);

GraphAnalysis analyze_graph(const AdjacencyMatrix& adj);
GraphAnalysis analyze_graph(const std::vector<std::vector<int>>& entries);

}  // namespace perron
