#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdkit/rewrite.hpp"
#include "tdkit/strings.hpp"

namespace tdkit {

/// Parameters of a block-exemplar pair: exemplar building blocks over pairwise
/// disjoint alphabets plus the duplication index sets that define the padded
/// copies X_1..X_p.
struct BlockExemplarInstance {
    std::size_t t = 0;  // block count parameter, > 1
    std::size_t p = 0;  // index-set count, 0 < p < t
    TDString X;
    std::vector<TDString> B;  // B[0..t]; |B0|,|B1| > 1, |Bi| = 1 for i >= 2
    std::vector<std::vector<std::size_t>> I;  // p distinct nonempty proper subsets of [|X|]
    Symbol L = kBlockMarker;

    /// Throws InputError naming the violated clause.
    void validate() const;
};

enum class ChunkKind { Marker, BExact, B0Family, B1Family, XFamily };

/// One macro-character: either the block marker, an exact block B_i (i >= 2),
/// or a duplication-padded copy of B0, B1 or X (dup_set empty for the base).
struct Chunk {
    ChunkKind kind = ChunkKind::Marker;
    std::size_t b_index = 0;             // for BExact
    std::vector<std::size_t> dup_set;    // for family chunks
    std::size_t begin = 0, end = 0;      // 1-based character span, inclusive

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct ExemplarPair {
    TDString S, T;
    std::vector<Chunk> s_chunks, t_chunks;
};

/// Assemble (S, T) from the instance, together with their chunk structure.
ExemplarPair build_block_exemplar(const BlockExemplarInstance& inst);

/// The ternary blocks sliced off the master square-free string.
struct SlicedBlocks {
    TDString Xtilde;
    std::vector<TDString> Btilde;  // 0..t
};

/// Minimum master-string length that guarantees slicing succeeds.
std::size_t master_length_bound(const BlockExemplarInstance& inst);

/// Slice X~ and B~_0..B~_t off the end of the square-free master string O:
/// lengths strictly increase and only B~_t starts with 0.
SlicedBlocks slice_blocks(const BlockExemplarInstance& inst, const TDString& O);

/// A block-exemplar instance together with its 5-ary encoding.
struct FiveAryInstance {
    BlockExemplarInstance inst;
    TDString O;
    SlicedBlocks blocks;
    TDString s_hat, t_hat;
};

/// Map the pair through the chunk encoding: marker fixed, B-chunks become
/// their sliced block plus a separator, family chunks replay the duplication
/// set on the block head.
std::pair<TDString, TDString> mu_encode(const BlockExemplarInstance& inst,
                                        const SlicedBlocks& blocks);

/// Generate a master string, slice it and encode the pair in one step.
FiveAryInstance reduce_instance(const BlockExemplarInstance& inst);

/// Apply the chunk encoding to a single exemplar-side chunk.
TDString mu_chunk(const FiveAryInstance& fi, const Chunk& chunk);

struct ChunkFactorization {
    bool ok = false;
    std::vector<Chunk> chunks;
    std::size_t error_offset = 0;  // 1-based position of the failed parse
    std::string message;
};

/// Greedy left-to-right parse of a 5-ary string into chunks: separators and
/// markers delimit, family membership is recovered by collapsing duplicated
/// letters back to the square-free base.
ChunkFactorization factorize_chunks(const TDString& s, const FiveAryInstance& fi);

enum class BlockForm { First, ClusterMember, EBlock };

struct BlockInfo {
    BlockForm form = BlockForm::First;
    std::size_t e_index = 0;       // for EBlock
    std::size_t chunk_begin = 0, chunk_end = 0;  // indices into the factorization
};

struct StandardFormCheck {
    bool ok = false;
    std::string violated;  // empty when ok
    std::vector<BlockInfo> blocks;
    ChunkFactorization factorization;
};

/// Verify the cluster/block shape every contraction intermediate keeps: a
/// leading full block, cluster members, and E-blocks with strictly increasing
/// indices.
StandardFormCheck check_standard_form(const TDString& s, const FiveAryInstance& fi);

enum class ContractionCase { A, B, C, Other };

/// Classify a contraction on a standard-form string: (a) a single duplicated
/// character inside a family chunk, (b) equivalent to removing a whole chunk
/// sequence, (c) a square splitting three same-family chunks around whole
/// chunk runs. Other signals a classifier failure.
ContractionCase classify_contraction(const TDString& s, const RewriteOp& op,
                                     const FiveAryInstance& fi);

/// Check the prefix/suffix/splice transfer relations between an exemplar
/// chunk C and its 5-ary image C_hat on concrete cut points:
///   - prefix equality of dup(C,I1)/dup(C,I2) at i transfers iff it holds on
///     the images;
///   - suffix equality at cuts (i, j) transfers iff it holds on the images;
///   - an image splice dup(C_hat,I1)[1,i] dup(C_hat,I2)[j+1,..] = dup(C_hat,I3)
///     forces the corresponding splice on C.
/// Returns true when all three relations hold for the given arguments.
bool mu_modularity_check(const TDString& C, const TDString& C_hat,
                         const std::vector<std::size_t>& I1, const std::vector<std::size_t>& I2,
                         const std::vector<std::size_t>& I3, std::size_t i, std::size_t j);

/// Deterministic valid instance for tests: alphabets are assigned from
/// consecutive symbol codes.
BlockExemplarInstance make_instance(std::size_t t, std::size_t p, std::size_t x_len,
                                    std::size_t b0_len, std::size_t b1_len,
                                    const std::vector<std::vector<std::size_t>>& index_sets);

}  // namespace tdkit
