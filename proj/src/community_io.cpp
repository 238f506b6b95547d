#include "qoce/community_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qoce/errors.hpp"

namespace qoce {

TokenSet make_token_set(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

bool canonical_community_less(const TokenSet& a, const TokenSet& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::vector<TokenSet> read_communities(std::istream& in) {
  std::vector<TokenSet> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    out.push_back(make_token_set(std::move(tokens)));
  }
  if (in.bad()) throw Error("I/O error while reading communities");
  return out;
}

std::vector<TokenSet> read_communities_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open community file '" + path + "'");
  return read_communities(in);
}

void write_communities(std::ostream& out, std::span<const TokenSet> communities) {
  for (const auto& c : communities) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << '\n';
  }
}

void write_communities_file(const std::string& path, std::span<const TokenSet> communities) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write community file '" + path + "'");
  write_communities(out, communities);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace qoce
