#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdle/diag.hpp"

namespace cdle {

enum class Tok {
  Ident,
  Def,
  DirCheck,
  DirFail,
  DirConv,
  DirNorm,
  DirSynth,
  Star,
  Pi,
  All,
  Iota,
  LamLower,
  LamUpper,
  Beta,
  Delta,
  Rho,
  Chi,
  Phi,
  Simeq,
  Cong,
  Cdot,
  Dot,
  Proj1,
  Proj2,
  Colon,
  Equals,
  LBrace,
  RBrace,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  Dash,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens; // always ends with an End token
  std::optional<Diagnostic> error;
};

LexResult lex(std::string_view text, const std::string& filename);

} // namespace cdle
