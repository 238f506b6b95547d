#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qoce {

/// Community in external-token space: sorted, duplicate-free.
using TokenSet = std::vector<std::string>;

TokenSet make_token_set(std::vector<std::string> tokens);

/// Size non-ascending, then lexicographic on the token sequence.
bool canonical_community_less(const TokenSet& a, const TokenSet& b);

/// One community per line, whitespace-separated tokens. Blank lines and lines
/// starting with `#` are skipped.
std::vector<TokenSet> read_communities(std::istream& in);
std::vector<TokenSet> read_communities_file(const std::string& path);

void write_communities(std::ostream& out, std::span<const TokenSet> communities);
void write_communities_file(const std::string& path, std::span<const TokenSet> communities);

}  // namespace qoce
