#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pte/game.hpp"

namespace pte {

/// Syntax or structure problem in game text, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Lines split into whitespace-separated tokens; '#' starts a comment that
/// runs to the end of the line. Blank lines disappear.
inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t word_start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > word_start) tokens.push_back(Token{std::string(line.substr(word_start, i - word_start)), line_no, word_start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));

    if (end == std::string_view::npos) break;
    start = end + 1;
    ++line_no;
  }
  return lines;
}

inline long long parse_positive_int(const Token& token, const char* what) {
  long long value = 0;
  if (token.text.empty() || token.text.size() > 9) throw ParseError(token.line, token.column, std::string(what) + " out of range");
  for (const char c : token.text) {
    if (c < '0' || c > '9') throw ParseError(token.line, token.column, std::string("expected ") + what + ", got '" + token.text + "'");
    value = value * 10 + (c - '0');
  }
  if (value <= 0) throw ParseError(token.line, token.column, std::string(what) + " must be positive");
  return value;
}

}  // namespace detail

/// Parses the normal-form game text format:
///
///   players: 2
///   strategies: 2 2
///   labels: Defect Cooperate     # optional, one line per player
///   labels: Defect Cooperate
///   1 1                          # one payoff line per profile, player 0's
///   3 0                          # strategy index varying slowest
///   0 3
///   2 2
///
/// Payoffs are integers, fractions "p/q", or decimals, all read exactly.
inline Game parse_game(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  std::size_t at = 0;
  const auto need_line = [&](const char* what) -> const std::vector<detail::Token>& {
    if (at >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().front().line, 1,
                                             std::string("missing ") + what);
    return lines[at];
  };

  const auto& players_line = need_line("'players:' header");
  if (players_line.front().text != "players:")
    throw ParseError(players_line.front().line, players_line.front().column, "expected 'players:' header");
  if (players_line.size() != 2)
    throw ParseError(players_line.front().line, players_line.front().column, "'players:' takes exactly one number");
  const auto players = static_cast<std::size_t>(detail::parse_positive_int(players_line[1], "player count"));
  ++at;

  const auto& strategies_line = need_line("'strategies:' header");
  if (strategies_line.front().text != "strategies:")
    throw ParseError(strategies_line.front().line, strategies_line.front().column, "expected 'strategies:' header");
  if (strategies_line.size() != players + 1)
    throw ParseError(strategies_line.front().line, strategies_line.front().column,
                     "'strategies:' needs one count per player (" + std::to_string(players) + ")");
  std::vector<int> counts;
  counts.reserve(players);
  std::size_t profiles = 1;
  constexpr std::size_t kMaxProfiles = std::size_t{1} << 24;
  for (std::size_t i = 1; i < strategies_line.size(); ++i) {
    const long long c = detail::parse_positive_int(strategies_line[i], "strategy count");
    if (static_cast<std::size_t>(c) > kMaxProfiles / profiles)
      throw ParseError(strategies_line[i].line, strategies_line[i].column, "profile space too large");
    counts.push_back(static_cast<int>(c));
    profiles *= static_cast<std::size_t>(c);
  }
  ++at;

  std::vector<std::vector<std::string>> labels;
  while (at < lines.size() && lines[at].front().text == "labels:") {
    const auto& line = lines[at];
    const std::size_t player = labels.size();
    if (player >= players) throw ParseError(line.front().line, line.front().column, "more 'labels:' lines than players");
    if (line.size() != static_cast<std::size_t>(counts[player]) + 1)
      throw ParseError(line.front().line, line.front().column,
                       "'labels:' for player " + std::to_string(player) + " needs " + std::to_string(counts[player]) +
                           " names");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < line.size(); ++i) names.push_back(line[i].text);
    labels.push_back(std::move(names));
    ++at;
  }
  if (!labels.empty() && labels.size() != players)
    throw ParseError(lines[at - 1].front().line, 1, "'labels:' lines must cover every player or none");

  std::vector<Rational> payoffs;
  payoffs.reserve(profiles * players);
  for (std::size_t p = 0; p < profiles; ++p) {
    if (at >= lines.size()) {
      const auto& last = lines.back();
      throw ParseError(last.front().line, 1,
                       "expected " + std::to_string(profiles) + " payoff lines, got " + std::to_string(p));
    }
    const auto& line = lines[at];
    if (line.size() != players)
      throw ParseError(line.front().line, line.front().column,
                       "payoff line needs " + std::to_string(players) + " values, got " + std::to_string(line.size()));
    for (const auto& token : line) {
      try {
        payoffs.push_back(Rational::parse(token.text));
      } catch (const std::exception&) {
        throw ParseError(token.line, token.column, "invalid payoff '" + token.text + "'");
      }
    }
    ++at;
  }
  if (at != lines.size()) {
    const auto& extra = lines[at];
    throw ParseError(extra.front().line, extra.front().column, "unexpected content after the payoff table");
  }

  return Game(std::move(counts), std::move(payoffs), std::move(labels));
}

/// Canonical text for a game; parse_game(serialize_game(g)) == g.
inline std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "players: " << game.player_count() << "\n";
  out << "strategies:";
  for (int i = 0; i < game.player_count(); ++i) out << " " << game.strategy_count(i);
  out << "\n";
  if (game.has_labels()) {
    for (int i = 0; i < game.player_count(); ++i) {
      out << "labels:";
      for (int s = 0; s < game.strategy_count(i); ++s) {
        const std::string& name = game.labels()[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos)
          throw std::invalid_argument("serialize_game: label '" + name + "' is not representable");
        out << " " << name;
      }
      out << "\n";
    }
  }
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    for (int i = 0; i < game.player_count(); ++i) {
      if (i > 0) out << " ";
      out << game.payoff(p, i).str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pte
