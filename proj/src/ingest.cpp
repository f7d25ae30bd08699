#include "crr/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "crr/errors.hpp"

namespace crr {

namespace {

bool all_digits(const std::string& tok) {
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::vector<std::size_t> parse_side(const std::vector<std::string>& tokens,
                                    std::size_t begin, std::size_t end,
                                    const std::unordered_map<std::string, std::size_t>& index,
                                    const char* what, std::size_t line_no) {
  if (begin >= end)
    throw ParseError(std::string("empty ") + what + " in reaction", line_no);
  std::vector<std::size_t> side;
  for (std::size_t t = begin; t < end; ++t) {
    const std::string& tok = tokens[t];
    if (all_digits(tok))
      throw ParseError("numeric token '" + tok +
                           "' looks like a multiplicity; stoichiometric coefficients "
                           "are not supported",
                       line_no);
    const auto it = index.find(tok);
    if (it == index.end())
      throw ParseError("unknown species '" + tok + "' in reaction", line_no);
    if (std::find(side.begin(), side.end(), it->second) != side.end())
      throw ParseError("species '" + tok + "' repeated in " + what +
                           "; multiplicities are not supported",
                       line_no);
    side.push_back(it->second);
  }
  return side;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::string> species;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Hyperarc> arcs;
  std::vector<std::string> arc_names;

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!header_seen) {
      if (tokens.size() != 2 || tokens[0] != "hyper" || tokens[1] != "1")
        throw ParseError("expected 'hyper 1' header", line_no);
      header_seen = true;
      continue;
    }
    if (tokens[0] == "species") {
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!index.emplace(tokens[t], species.size()).second)
          throw ParseError("duplicate species '" + tokens[t] + "'", line_no);
        species.push_back(tokens[t]);
      }
      continue;
    }
    if (tokens[0] == "reaction") {
      // reaction <id> : tail... -> head...
      if (tokens.size() < 3 || tokens[2] != ":")
        throw ParseError("expected 'reaction <id> : <tail> -> <head>'", line_no);
      const auto arrow = std::find(tokens.begin(), tokens.end(), "->");
      if (arrow == tokens.end())
        throw ParseError("reaction has no '->'", line_no);
      const std::size_t arrow_idx = static_cast<std::size_t>(arrow - tokens.begin());
      Hyperarc arc;
      arc.tail = parse_side(tokens, 3, arrow_idx, index, "tail", line_no);
      arc.head = parse_side(tokens, arrow_idx + 1, tokens.size(), index, "head", line_no);
      arcs.push_back(std::move(arc));
      arc_names.push_back(tokens[1]);
      continue;
    }
    throw ParseError("unrecognized directive '" + tokens[0] + "'", line_no);
  }
  if (!header_seen) throw ParseError("empty input, expected 'hyper 1' header", line_no);
  return Hypergraph(std::move(species), std::move(arcs), std::move(arc_names));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << "hyper 1\n";
  out << "species";
  for (const auto& s : h.species()) out << ' ' << s;
  out << '\n';
  for (std::size_t a = 0; a < h.n_arcs(); ++a) {
    out << "reaction " << h.arc_names()[a] << " :";
    for (std::size_t i : h.arcs()[a].tail) out << ' ' << h.species()[i];
    out << " ->";
    for (std::size_t j : h.arcs()[a].head) out << ' ' << h.species()[j];
    out << '\n';
  }
}

std::pair<CrrInstance, NetworkStats> instance_from_network(const Hypergraph& h,
                                                           const std::string& source_tag) {
  InstanceMeta meta;
  meta.source = source_tag;
  CrrInstance inst(derive_s(h), derive_r(h), std::move(meta));
  NetworkStats st;
  st.name = source_tag;
  st.n = inst.n();
  st.m = inst.m();
  st.ones_s = inst.s().count_ones();
  st.ones_r = inst.r().count_ones();
  st.p = inst.s().zero_fraction();
  st.q = inst.r().zero_fraction();
  inst.meta().p = st.p;
  inst.meta().q = st.q;
  return {std::move(inst), std::move(st)};
}

std::string stats_report(const std::vector<NetworkStats>& stats,
                         const std::vector<SolveRecord>* solved) {
  if (solved && solved->size() != stats.size())
    throw ContractError("stats_report: solve records do not match stats rows");
  std::ostringstream out;
  out << "name,n,m,p,q";
  if (solved) out << ",outcome,wall_time_ms";
  out << '\n';
  out.setf(std::ios::fixed);
  out.precision(6);
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const NetworkStats& st = stats[i];
    out << st.name << ',' << st.n << ',' << st.m << ',' << st.p << ',' << st.q;
    if (solved) {
      out << ',' << to_string((*solved)[i].outcome) << ','
          << static_cast<long long>((*solved)[i].wall_ms + 0.5);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace crr
