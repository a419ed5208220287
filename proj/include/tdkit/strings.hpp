#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tdkit {

/// Raised when an operation is handed arguments that violate its contract.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised by contraction when the addressed substring is not a square.
struct NotASquareError : InputError {
    using InputError::InputError;
};

/// Symbol code. Text I/O maps '0'-'9' to 0-9, 'a'-'z' to 10-35, plus the
/// reserved block marker 'L' (36) and separator '$' (37).
using Symbol = std::uint8_t;

constexpr Symbol kBlockMarker = 36;  // printed as 'L'
constexpr Symbol kSeparator = 37;    // printed as '$'
constexpr Symbol kMaxSymbol = 37;

char symbol_to_char(Symbol s);
std::optional<Symbol> char_to_symbol(char c);

/// An ordered set of distinct symbol codes.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    /// The alphabet {0, 1, ..., q-1}.
    static Alphabet range(std::size_t q);

    std::size_t size() const { return symbols_.size(); }
    bool contains(Symbol s) const;
    const std::vector<Symbol>& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// A finite sequence of symbols over a declared alphabet. Immutable after
/// construction; every operation below is a pure function.
class TDString {
public:
    TDString() = default;
    TDString(Alphabet alphabet, std::string codes);

    /// Parse a printable literal; the alphabet is the sorted set of symbols
    /// that occur in it.
    static TDString parse(std::string_view text);
    /// Parse a printable literal over a caller-supplied alphabet.
    static TDString parse(std::string_view text, Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& data() const { return data_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    /// Symbol at 1-based position i.
    Symbol at(std::size_t i) const;
    /// Substring s[i..j] (1-based, inclusive); empty when i > j.
    TDString slice(std::size_t i, std::size_t j) const;

    std::string str() const;

    friend bool operator==(const TDString&, const TDString&) = default;

private:
    Alphabet alphabet_;
    std::string data_;  // one byte per symbol code
};

/// A maximal block of equal symbols.
struct Run {
    Symbol symbol;
    std::size_t length;  // >= 1

    friend bool operator==(const Run&, const Run&) = default;
};

/// Ordered run list; adjacent runs carry different symbols.
struct RunLengthEncoding {
    std::vector<Run> runs;

    std::size_t run_count() const { return runs.size(); }
    std::size_t total_length() const;
    /// Expand back into a string over the given alphabet.
    TDString decode(const Alphabet& alphabet) const;

    friend bool operator==(const RunLengthEncoding&, const RunLengthEncoding&) = default;
};

RunLengthEncoding rle(const TDString& s);

/// A square occurrence s[start..start+2*half_len-1] with equal halves.
struct SquarePos {
    std::size_t start;     // 1-based
    std::size_t half_len;  // >= 1

    friend bool operator==(const SquarePos&, const SquarePos&) = default;
    friend auto operator<=>(const SquarePos&, const SquarePos&) = default;
};

bool is_square_free(const TDString& s);
bool is_square_free(std::string_view codes);

/// All squares, sorted by (start, half_len). Overlapping occurrences are all
/// reported; duplicates by (start, half_len) are impossible by construction.
std::vector<SquarePos> find_squares(const TDString& s);
std::vector<SquarePos> find_squares(std::string_view codes);

/// Duplicate in place every character of `a` whose 1-based index is in
/// `indices`. |result| = |a| + |indices|.
TDString dup(const TDString& a, const std::vector<std::size_t>& indices);
/// a with every character doubled.
TDString dup_all(const TDString& a);

/// When the run symbols of s cycle through all distinct symbols of s in first
/// appearance order, returns s relabeled so that run i carries symbol
/// (i-1) mod q; otherwise nullopt. The empty string is not purely alternating.
std::optional<TDString> purely_alternating_form(const TDString& s);
inline bool is_purely_alternating(const TDString& s) {
    return purely_alternating_form(s).has_value();
}

/// Run-wise domination: equal run counts, equal run symbols, and every run of
/// s no longer than the corresponding run of t. Both strings must be nonempty.
bool matches(const TDString& s, const TDString& t);

/// Square-free root plus the duplication index set reproducing s.
struct AlmostSquareFreeDecomposition {
    TDString root;
    std::vector<std::size_t> dup_indices;  // 1-based into root, sorted
};

/// Collapses adjacent equal letters to a candidate root, then verifies that
/// the root is square-free and that s = dup(root, I). The decomposition is
/// unique when it exists.
std::optional<AlmostSquareFreeDecomposition> almost_square_free_root(const TDString& s);
inline bool is_almost_square_free(const TDString& s) {
    return almost_square_free_root(s).has_value();
}

/// All characters pairwise distinct.
bool is_exemplar(const TDString& s);

bool is_subsequence(const TDString& sub, const TDString& s);
bool is_subsequence(std::string_view sub, std::string_view s);

/// Concatenate over the union of the operands' alphabets.
TDString concat(const std::vector<TDString>& parts);

}  // namespace tdkit
