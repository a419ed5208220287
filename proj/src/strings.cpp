#include "tdkit/strings.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace tdkit {

char symbol_to_char(Symbol s) {
    if (s <= 9) return static_cast<char>('0' + s);
    if (s <= 35) return static_cast<char>('a' + (s - 10));
    if (s == kBlockMarker) return 'L';
    if (s == kSeparator) return '$';
    throw InputError("symbol code out of printable range: " + std::to_string(int(s)));
}

std::optional<Symbol> char_to_symbol(char c) {
    if (c >= '0' && c <= '9') return Symbol(c - '0');
    if (c >= 'a' && c <= 'z') return Symbol(10 + (c - 'a'));
    if (c == 'L') return kBlockMarker;
    if (c == '$') return kSeparator;
    return std::nullopt;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("alphabet symbols must be pairwise distinct");
    for (Symbol s : symbols_)
        if (s > kMaxSymbol) throw InputError("alphabet symbol out of range");
}

Alphabet Alphabet::range(std::size_t q) {
    std::vector<Symbol> syms(q);
    for (std::size_t i = 0; i < q; ++i) syms[i] = static_cast<Symbol>(i);
    return Alphabet(std::move(syms));
}

bool Alphabet::contains(Symbol s) const {
    return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

TDString::TDString(Alphabet alphabet, std::string codes)
    : alphabet_(std::move(alphabet)), data_(std::move(codes)) {
    for (unsigned char c : data_)
        if (!alphabet_.contains(Symbol(c)))
            throw InputError("string contains a symbol outside its alphabet");
}

TDString TDString::parse(std::string_view text) {
    std::array<bool, kMaxSymbol + 1> seen{};
    std::string codes;
    codes.reserve(text.size());
    for (char c : text) {
        auto s = char_to_symbol(c);
        if (!s) throw InputError(std::string("unmappable character '") + c + "' in string literal");
        seen[*s] = true;
        codes.push_back(static_cast<char>(*s));
    }
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i <= kMaxSymbol; ++i)
        if (seen[i]) syms.push_back(static_cast<Symbol>(i));
    return TDString(Alphabet(std::move(syms)), std::move(codes));
}

TDString TDString::parse(std::string_view text, Alphabet alphabet) {
    std::string codes;
    codes.reserve(text.size());
    for (char c : text) {
        auto s = char_to_symbol(c);
        if (!s) throw InputError(std::string("unmappable character '") + c + "' in string literal");
        codes.push_back(static_cast<char>(*s));
    }
    return TDString(std::move(alphabet), std::move(codes));
}

Symbol TDString::at(std::size_t i) const {
    if (i < 1 || i > data_.size()) throw InputError("index out of range");
    return Symbol(static_cast<unsigned char>(data_[i - 1]));
}

TDString TDString::slice(std::size_t i, std::size_t j) const {
    if (i > j) return TDString(alphabet_, "");
    if (i < 1 || j > data_.size()) throw InputError("slice out of range");
    return TDString(alphabet_, data_.substr(i - 1, j - i + 1));
}

std::string TDString::str() const {
    std::string out;
    out.reserve(data_.size());
    for (unsigned char c : data_) out.push_back(symbol_to_char(Symbol(c)));
    return out;
}

std::size_t RunLengthEncoding::total_length() const {
    std::size_t n = 0;
    for (const Run& r : runs) n += r.length;
    return n;
}

TDString RunLengthEncoding::decode(const Alphabet& alphabet) const {
    std::string codes;
    codes.reserve(total_length());
    for (const Run& r : runs) codes.append(r.length, static_cast<char>(r.symbol));
    return TDString(alphabet, std::move(codes));
}

RunLengthEncoding rle(const TDString& s) {
    RunLengthEncoding enc;
    const std::string& d = s.data();
    std::size_t i = 0;
    while (i < d.size()) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        enc.runs.push_back(Run{Symbol(static_cast<unsigned char>(d[i])), j - i});
        i = j;
    }
    return enc;
}

namespace {

// For a fixed shift d, agree[i] = length of the longest block with
// s[i+k] == s[i+d+k] for k < agree[i]. A square of half-length d starts at i
// iff agree[i] >= d. One backward sweep per d gives the quadratic scan.
bool has_square_at_shift(std::string_view s, std::size_t d) {
    const std::size_t n = s.size();
    std::size_t agree = 0;
    for (std::size_t i = n - d; i-- > 0;) {
        agree = (s[i] == s[i + d]) ? agree + 1 : 0;
        if (agree >= d) return true;
    }
    return false;
}

// Same test with the equality stream packed 64 positions per word; used for
// long inputs where the plain sweep is too slow.
bool has_square_at_shift_packed(std::string_view s, std::size_t d) {
    const std::size_t n = s.size();
    const std::size_t cmp = n - d;  // positions i with both s[i], s[i+d] valid
    std::size_t run = 0;            // current streak of equal positions
    for (std::size_t base = 0; base < cmp; base += 64) {
        const std::size_t chunk = std::min<std::size_t>(64, cmp - base);
        std::uint64_t eq = 0;
        for (std::size_t k = 0; k < chunk; ++k)
            eq |= std::uint64_t(s[base + k] == s[base + k + d]) << k;
        if (chunk == 64 && eq == ~std::uint64_t(0)) {
            run += 64;
            if (run >= d) return true;
            continue;
        }
        const std::uint64_t mask = (chunk == 64) ? ~std::uint64_t(0)
                                                 : ((std::uint64_t(1) << chunk) - 1);
        std::uint64_t w = eq & mask;
        const unsigned lead = std::min<unsigned>(std::countr_one(w), unsigned(chunk));
        if (run + lead >= d) return true;
        // longest run of ones inside the word
        std::uint64_t v = w;
        unsigned best = 0;
        while (v) {
            ++best;
            v &= v << 1;
        }
        if (best >= d) return true;
        // streak continuing into the next word
        run = 0;
        for (std::size_t k = chunk; k-- > 0 && (w >> k) & 1;) ++run;
        if (run >= d) return true;
    }
    return false;
}

}  // namespace

bool is_square_free(std::string_view codes) {
    const std::size_t n = codes.size();
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        bool found = (n >= 4096) ? has_square_at_shift_packed(codes, d)
                                 : has_square_at_shift(codes, d);
        if (found) return false;
    }
    return true;
}

bool is_square_free(const TDString& s) { return is_square_free(std::string_view(s.data())); }

std::vector<SquarePos> find_squares(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<SquarePos> out;
    std::vector<std::size_t> agree(n + 1);
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        agree[n - d] = 0;
        for (std::size_t i = n - d; i-- > 0;)
            agree[i] = (s[i] == s[i + d]) ? agree[i + 1] + 1 : 0;
        for (std::size_t i = 0; i + 2 * d <= n; ++i)
            if (agree[i] >= d) out.push_back(SquarePos{i + 1, d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SquarePos> find_squares(const TDString& s) {
    return find_squares(std::string_view(s.data()));
}

TDString dup(const TDString& a, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.size() != indices.size()) throw InputError("dup indices must be distinct");
    if (!idx.empty() && (idx.front() < 1 || idx.back() > a.size()))
        throw InputError("dup index out of range");
    std::string out;
    out.reserve(a.size() + idx.size());
    std::size_t next = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        char c = a.data()[i - 1];
        out.push_back(c);
        if (next < idx.size() && idx[next] == i) {
            out.push_back(c);
            ++next;
        }
    }
    return TDString(a.alphabet(), std::move(out));
}

TDString dup_all(const TDString& a) {
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) idx[i] = i + 1;
    return dup(a, idx);
}

std::optional<TDString> purely_alternating_form(const TDString& s) {
    if (s.empty()) return std::nullopt;
    std::array<int, kMaxSymbol + 1> rank;
    rank.fill(-1);
    int q = 0;
    for (unsigned char c : s.data())
        if (rank[c] < 0) rank[c] = q++;
    RunLengthEncoding enc = rle(s);
    for (std::size_t i = 0; i < enc.runs.size(); ++i)
        if (rank[enc.runs[i].symbol] != int(i % std::size_t(q))) return std::nullopt;
    std::string codes;
    codes.reserve(s.size());
    for (unsigned char c : s.data()) codes.push_back(static_cast<char>(rank[c]));
    return TDString(Alphabet::range(std::size_t(q)), std::move(codes));
}

bool matches(const TDString& s, const TDString& t) {
    if (s.empty() || t.empty()) throw InputError("matches requires nonempty strings");
    RunLengthEncoding a = rle(s), b = rle(t);
    if (a.run_count() != b.run_count()) return false;
    for (std::size_t i = 0; i < a.run_count(); ++i)
        if (a.runs[i].symbol != b.runs[i].symbol || a.runs[i].length > b.runs[i].length)
            return false;
    return true;
}

std::optional<AlmostSquareFreeDecomposition> almost_square_free_root(const TDString& s) {
    // Collapse adjacent equal letters greedily, then replay the collapse as a
    // duplication set; the root walk fails on triples and misalignments.
    std::string root;
    for (char c : s.data())
        if (root.empty() || root.back() != c) root.push_back(c);
    if (!is_square_free(std::string_view(root))) return std::nullopt;

    std::vector<std::size_t> indices;
    const std::string& d = s.data();
    std::size_t pos = 0;
    for (std::size_t i = 0; i < root.size(); ++i) {
        if (pos >= d.size() || d[pos] != root[i]) return std::nullopt;
        ++pos;
        if (pos < d.size() && d[pos] == root[i]) {
            indices.push_back(i + 1);
            ++pos;
        }
    }
    if (pos != d.size()) return std::nullopt;
    return AlmostSquareFreeDecomposition{TDString(s.alphabet(), std::move(root)),
                                         std::move(indices)};
}

bool is_exemplar(const TDString& s) {
    std::array<bool, kMaxSymbol + 1> seen{};
    for (unsigned char c : s.data()) {
        if (seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

bool is_subsequence(std::string_view sub, std::string_view s) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < sub.size() && j < s.size(); ++j)
        if (sub[i] == s[j]) ++i;
    return i == sub.size();
}

bool is_subsequence(const TDString& sub, const TDString& s) {
    return is_subsequence(std::string_view(sub.data()), std::string_view(s.data()));
}

TDString concat(const std::vector<TDString>& parts) {
    std::array<bool, kMaxSymbol + 1> seen{};
    std::string codes;
    for (const TDString& p : parts) {
        for (Symbol s : p.alphabet().symbols()) seen[s] = true;
        codes += p.data();
    }
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i <= kMaxSymbol; ++i)
        if (seen[i]) syms.push_back(static_cast<Symbol>(i));
    return TDString(Alphabet(std::move(syms)), std::move(codes));
}

}  // namespace tdkit
