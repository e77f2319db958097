#include "nomc/parser.hpp"

#include <cctype>
#include <optional>

namespace nomc {

namespace {

enum class Tok {
  Ident,    // atoms, variables, symbols, keywords
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Dot,
  Turnstile,  // |-
  Eq,         // =
  EqQ,        // =?
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {
    tok_ = scan();
    next_ = scan();
  }

  const Token& peek() const { return tok_; }
  const Token& peek2() const { return next_; }

  Token take() {
    Token t = std::move(tok_);
    tok_ = std::move(next_);
    next_ = scan();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, tok_.line, tok_.col);
  }

 private:
  Token scan() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      bump();
    std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return Token{Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        text += src_[pos_];
        bump();
      }
      return Token{Tok::Ident, std::move(text), line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        bump();
      }
      return Token{Tok::Number, std::move(text), line, col};
    }
    auto single = [&](Tok kind) {
      bump();
      return Token{kind, std::string(1, c), line, col};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case ';': return single(Tok::Semi);
      case ':': return single(Tok::Colon);
      case '.': return single(Tok::Dot);
      case '|':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
          bump();
          bump();
          return Token{Tok::Turnstile, "|-", line, col};
        }
        throw ParseError("expected |-", line, col);
      case '=':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '?') {
          bump();
          bump();
          return Token{Tok::EqQ, "=?", line, col};
        }
        return single(Tok::Eq);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
  Token next_{Tok::End, "", 1, 1};
};

bool is_keyword(const std::string& text) {
  return text == "sig" || text == "comm" || text == "new" || text == "fix" ||
         text == "id";
}

bool is_variable_name(const std::string& text) {
  return !text.empty() && std::isupper(static_cast<unsigned char>(text[0]));
}

// Trailing digits form the index: "c12" -> ("c", 12).
Atom make_atom(const std::string& text) {
  std::size_t cut = text.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(text[cut - 1])))
    --cut;
  if (cut == text.size()) return Atom{text, 0};
  return Atom{text.substr(0, cut),
              static_cast<unsigned>(std::stoul(text.substr(cut)))};
}

class Parser {
 public:
  Parser(std::string_view src, const Signature* sig) : lex_(src) {
    if (sig) sig_ = *sig;
  }

  ProblemFile file() {
    ProblemFile out;
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "sig")
      signature();
    out.sig = sig_;

    AtomSet binder_names = binder();
    if (lex_.peek().kind == Tok::LBrace) {
      out.kind = ProblemFile::Kind::Judgement;
      std::vector<FixConstraint> constraints = context_body();
      expect(Tok::Turnstile, "|-");
      Term lhs = term();
      expect(Tok::Eq, "=");
      Term rhs = term();
      out.judgement.emplace(
          Judgement{Context(binder_names, std::move(constraints)), lhs, rhs});
    } else {
      out.kind = ProblemFile::Kind::Goal;
      out.goal.nu_names = binder_names;
      for (;;) {
        Term lhs = term();
        expect(Tok::EqQ, "=?");
        Term rhs = term();
        out.goal.constraints.push_back(EqConstraint{lhs, rhs});
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::End, "end of input");
    return out;
  }

  Perm perm_only() {
    Perm p = perm();
    expect(Tok::End, "end of input");
    return p;
  }

  Term term_only() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Context context_only() {
    AtomSet names = binder();
    std::vector<FixConstraint> constraints = context_body();
    expect(Tok::End, "end of input");
    return Context(std::move(names), std::move(constraints));
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      lex_.fail("expected " + what + ", got '" + lex_.peek().text + "'");
    return lex_.take();
  }

  std::string ident(const std::string& what) {
    if (lex_.peek().kind != Tok::Ident)
      lex_.fail("expected " + what + ", got '" + lex_.peek().text + "'");
    return lex_.take().text;
  }

  Atom atom(const std::string& what = "atom") {
    std::string name = ident(what);
    if (is_keyword(name)) lex_.fail("keyword '" + name + "' used as " + what);
    if (is_variable_name(name))
      lex_.fail("variable '" + name + "' used as " + what);
    if (sig_.find(name))
      lex_.fail("symbol '" + name + "' used as " + what);
    return make_atom(name);
  }

  void signature() {
    lex_.take();  // "sig"
    // An entry is always `ident : arity`, which disambiguates the start
    // of the statement from further declarations.
    while (lex_.peek().kind == Tok::Ident && !is_keyword(lex_.peek().text) &&
           lex_.peek2().kind == Tok::Colon) {
      Token name = lex_.take();
      if (is_variable_name(name.text))
        throw ParseError("symbol must start lowercase: " + name.text,
                         name.line, name.col);
      expect(Tok::Colon, "':'");
      Token arity = expect(Tok::Number, "arity");
      Theory theory = Theory::Empty;
      if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "comm") {
        lex_.take();
        theory = Theory::C;
      }
      expect(Tok::Semi, "';'");
      try {
        sig_.declare(name.text, std::stoul(arity.text), theory);
      } catch (const SignatureError& e) {
        throw ParseError(e.what(), name.line, name.col);
      }
    }
  }

  AtomSet binder() {
    AtomSet names;
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "new") {
      lex_.take();
      names.insert(atom("nu-quantified atom"));
      while (lex_.peek().kind == Tok::Ident) names.insert(atom("nu-quantified atom"));
      expect(Tok::Dot, "'.' after binder");
    }
    return names;
  }

  std::vector<FixConstraint> context_body() {
    expect(Tok::LBrace, "'{'");
    std::vector<FixConstraint> out;
    if (lex_.peek().kind != Tok::RBrace) {
      for (;;) {
        Perm p = perm();
        std::string kw = ident("'fix'");
        if (kw != "fix") lex_.fail("expected 'fix'");
        std::string var = ident("variable");
        if (!is_variable_name(var))
          lex_.fail("fixed-point constraints apply to variables, got '" + var +
                    "'");
        out.push_back(FixConstraint{std::move(p), Variable{std::move(var)}});
        if (lex_.peek().kind != Tok::Comma) break;
        lex_.take();
      }
    }
    expect(Tok::RBrace, "'}'");
    return out;
  }

  Perm perm() {
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "id") {
      lex_.take();
      return Perm{};
    }
    std::vector<Perm::Cycle> cycles;
    if (lex_.peek().kind != Tok::LParen) lex_.fail("expected permutation");
    Token start = lex_.peek();
    while (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Perm::Cycle cyc;
      cyc.push_back(atom());
      while (lex_.peek().kind != Tok::RParen) cyc.push_back(atom());
      lex_.take();
      if (cyc.size() < 2) lex_.fail("cycle needs at least two atoms");
      cycles.push_back(std::move(cyc));
    }
    try {
      return Perm::from_cycles(cycles);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start.line, start.col);
    }
  }

  Term term() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::LBracket: {
        lex_.take();
        Atom binder = atom("abstraction binder");
        expect(Tok::RBracket, "']'");
        return Term::abs(binder, term());
      }
      case Tok::LParen: {
        Perm p = perm();
        expect(Tok::Dot, "'.' between permutation and variable");
        std::string var = ident("variable");
        if (!is_variable_name(var))
          lex_.fail("suspensions apply to variables, got '" + var + "'");
        return Term::susp(std::move(p), Variable{std::move(var)});
      }
      case Tok::Ident: {
        if (t.text == "id") {
          lex_.take();
          expect(Tok::Dot, "'.' between permutation and variable");
          std::string var = ident("variable");
          if (!is_variable_name(var))
            lex_.fail("suspensions apply to variables, got '" + var + "'");
          return Term::var(Variable{std::move(var)});
        }
        if (is_variable_name(t.text)) return Term::var(Variable{lex_.take().text});
        Token name = lex_.take();
        if (const SymbolInfo* info = sig_.find(name.text)) {
          expect(Tok::LParen, "'(' after symbol " + name.text);
          std::vector<Term> args;
          if (lex_.peek().kind != Tok::RParen) {
            args.push_back(term());
            while (lex_.peek().kind == Tok::Comma) {
              lex_.take();
              args.push_back(term());
            }
          }
          expect(Tok::RParen, "')'");
          if (args.size() != info->arity)
            throw ParseError("symbol " + name.text + " expects " +
                                 std::to_string(info->arity) + " arguments, got " +
                                 std::to_string(args.size()),
                             name.line, name.col);
          return Term::app(name.text, info->theory, std::move(args));
        }
        if (is_keyword(name.text))
          throw ParseError("keyword '" + name.text + "' used as term",
                           name.line, name.col);
        if (lex_.peek().kind == Tok::LParen)
          throw ParseError("undeclared symbol: " + name.text, name.line,
                           name.col);
        return Term::atom(make_atom(name.text));
      }
      default:
        lex_.fail("expected term");
    }
  }

  Lexer lex_;
  Signature sig_;
};

}  // namespace

ProblemFile parse_file(std::string_view text) {
  return Parser(text, nullptr).file();
}

Perm parse_perm(std::string_view text) { return Parser(text, nullptr).perm_only(); }

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, &sig).term_only();
}

Context parse_context(std::string_view text) {
  return Parser(text, nullptr).context_only();
}

std::string print_file(const ProblemFile& file) {
  std::string out;
  if (!file.sig.entries().empty()) {
    out += "sig";
    for (const auto& [name, info] : file.sig.entries()) {
      out += " " + name + ":" + std::to_string(info.arity);
      if (info.theory == Theory::C) out += " comm";
      out += ";";
    }
    out += "\n";
  }
  if (file.kind == ProblemFile::Kind::Judgement) {
    out += to_string(*file.judgement);
  } else {
    const UnifProblem& goal = file.goal;
    if (!goal.nu_names.empty()) {
      out += "new";
      for (const Atom& a : goal.nu_names) out += " " + a.str();
      out += " . ";
    }
    for (std::size_t i = 0; i < goal.constraints.size(); ++i) {
      if (i) out += ", ";
      out += to_string(goal.constraints[i].lhs) + " =? " +
             to_string(goal.constraints[i].rhs);
    }
  }
  return out;
}

}  // namespace nomc
