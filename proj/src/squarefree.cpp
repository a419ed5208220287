#include "tdkit/squarefree.hpp"

namespace tdkit {

TDString Morphism::iterate(std::size_t depth) const {
    for (const TDString& img : images)
        if (img.empty()) throw InputError("morphism images must be nonempty");
    const Alphabet ternary = Alphabet::range(3);
    std::string cur(1, '\0');  // seed "0"
    for (std::size_t it = 0; it < depth; ++it) {
        std::string next;
        next.reserve(cur.size() * images[0].size());
        for (unsigned char c : cur) {
            if (c > 2) throw InputError("morphism iterate left the ternary alphabet");
            next += images[c].data();
        }
        cur = std::move(next);
    }
    return TDString(ternary, std::move(cur));
}

Morphism leech_morphism() {
    return Morphism{{TDString::parse("0121021201210", Alphabet::range(3)),
                     TDString::parse("1202102012021", Alphabet::range(3)),
                     TDString::parse("2010210120102", Alphabet::range(3))}};
}

TDString squarefree_generate(std::size_t min_len) {
    if (min_len < 1) throw InputError("min_len must be positive");
    const Morphism m = leech_morphism();
    std::size_t depth = 0;
    std::size_t len = 1;
    while (len < min_len) {
        len *= m.images[0].size();
        ++depth;
    }
    TDString word = m.iterate(depth);
    return word.slice(1, min_len);
}

bool verify_square_free_preserving(const Morphism& m, std::size_t depth) {
    if (depth < 1) throw InputError("depth must be at least 1");
    for (std::size_t d = 0; d <= depth; ++d)
        if (!is_square_free(m.iterate(d))) return false;
    return true;
}

}  // namespace tdkit
