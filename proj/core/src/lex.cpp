#include "lex.hpp"

#include <cctype>
#include <map>

namespace cdle {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

const std::map<std::string_view, Tok> kKeywords = {
    {"def", Tok::Def},    {"All", Tok::All},     {"Pi", Tok::Pi},
    {"iota", Tok::Iota},  {"lam", Tok::LamLower}, {"Lam", Tok::LamUpper},
    {"beta", Tok::Beta},  {"delta", Tok::Delta}, {"rho", Tok::Rho},
    {"chi", Tok::Chi},    {"phi", Tok::Phi},
};

// Multi-byte UTF-8 operators in the canonical syntax.
const std::map<std::string_view, Tok> kUnicode = {
    {"★", Tok::Star},     // ★
    {"∀", Tok::All},      // ∀
    {"Π", Tok::Pi},       // Π
    {"ι", Tok::Iota},     // ι
    {"λ", Tok::LamLower}, // λ
    {"Λ", Tok::LamUpper}, // Λ
    {"β", Tok::Beta},     // β
    {"δ", Tok::Delta},    // δ
    {"ρ", Tok::Rho},      // ρ
    {"χ", Tok::Chi},      // χ
    {"φ", Tok::Phi},      // φ
    {"≃", Tok::Simeq},    // ≃
    {"≅", Tok::Cong},     // ≅
    {"·", Tok::Cdot},     // ·
};

struct Lexer {
  std::string_view text;
  std::string filename;
  std::size_t pos = 0;
  std::uint32_t line = 1;
  std::uint32_t col = 1;

  char at(std::size_t off = 0) const {
    return pos + off < text.size() ? text[pos + off] : '\0';
  }
  bool done() const { return pos >= text.size(); }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos < text.size(); ++i) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  SourceSpan here() const {
    SourceSpan sp;
    sp.file = filename;
    sp.begin = sp.end = static_cast<std::uint32_t>(pos);
    sp.line = sp.end_line = line;
    sp.col = sp.end_col = col;
    return sp;
  }

  Token finish(Tok kind, SourceSpan start, std::string text_out) {
    start.end = static_cast<std::uint32_t>(pos);
    start.end_line = line;
    start.end_col = col;
    return Token{kind, std::move(text_out), std::move(start)};
  }
};

} // namespace

LexResult lex(std::string_view text, const std::string& filename) {
  Lexer lx{text, filename};
  LexResult out;

  while (!lx.done()) {
    char c = lx.at();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      lx.advance(1);
      continue;
    }
    if (c == '-' && lx.at(1) == '-') {
      while (!lx.done() && lx.at() != '\n') lx.advance(1);
      continue;
    }

    SourceSpan start = lx.here();

    // Unicode operators first: all start with a byte >= 0x80.
    if (static_cast<unsigned char>(c) >= 0x80) {
      bool matched = false;
      for (const auto& [seq, kind] : kUnicode) {
        if (text.substr(lx.pos, seq.size()) == seq) {
          lx.advance(seq.size());
          out.tokens.push_back(lx.finish(kind, start, std::string(seq)));
          matched = true;
          break;
        }
      }
      if (matched) continue;
      Diagnostic d;
      d.code = DiagCode::ParseError;
      d.message = "unrecognized character";
      d.span = start;
      out.error = d;
      return out;
    }

    if (ident_start(c)) {
      std::size_t begin = lx.pos;
      while (!lx.done() && ident_char(lx.at())) lx.advance(1);
      std::string word(text.substr(begin, lx.pos - begin));
      auto kw = kKeywords.find(word);
      out.tokens.push_back(lx.finish(kw == kKeywords.end() ? Tok::Ident : kw->second, start, word));
      continue;
    }

    if (c == '#') {
      std::size_t begin = lx.pos;
      lx.advance(1);
      while (!lx.done() && ident_char(lx.at())) lx.advance(1);
      std::string word(text.substr(begin, lx.pos - begin));
      Tok kind;
      if (word == "#check") kind = Tok::DirCheck;
      else if (word == "#fail") kind = Tok::DirFail;
      else if (word == "#conv") kind = Tok::DirConv;
      else if (word == "#norm") kind = Tok::DirNorm;
      else if (word == "#synth") kind = Tok::DirSynth;
      else {
        Diagnostic d;
        d.code = DiagCode::ParseError;
        d.message = "unknown directive '" + word + "'";
        d.span = start;
        out.error = d;
        return out;
      }
      out.tokens.push_back(lx.finish(kind, start, word));
      continue;
    }

    auto single = [&](Tok kind, std::size_t n = 1) {
      std::string s(text.substr(lx.pos, n));
      lx.advance(n);
      out.tokens.push_back(lx.finish(kind, start, s));
    };

    switch (c) {
      case '*': single(Tok::Star); continue;
      case '@': single(Tok::Cdot); continue;
      case ':': single(Tok::Colon); continue;
      case '{': single(Tok::LBrace); continue;
      case '}': single(Tok::RBrace); continue;
      case '[': single(Tok::LBrack); continue;
      case ']': single(Tok::RBrack); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '-': single(Tok::Dash); continue;
      case '=':
        if (lx.at(1) == '=') single(Tok::Simeq, 2);
        else single(Tok::Equals);
        continue;
      case '~':
        if (lx.at(1) == '=') {
          single(Tok::Cong, 2);
          continue;
        }
        break;
      case '.':
        if (lx.at(1) == '1') single(Tok::Proj1, 2);
        else if (lx.at(1) == '2') single(Tok::Proj2, 2);
        else single(Tok::Dot);
        continue;
      default: break;
    }

    Diagnostic d;
    d.code = DiagCode::ParseError;
    d.message = std::string("unexpected character '") + c + "'";
    d.span = start;
    out.error = d;
    return out;
  }

  Token end;
  end.kind = Tok::End;
  end.span = lx.here();
  out.tokens.push_back(end);
  return out;
}

} // namespace cdle
