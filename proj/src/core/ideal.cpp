#include "ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace charclass {

namespace {

// Two slots are reserved for auxiliary variables (Rabinowitsch and
// elimination parameters).
constexpr std::size_t kMaxUserVars = Monomial::kMaxVars - 2;
constexpr unsigned kMaxLiteralExponent = 64;

enum class Tok { ident, integer, colon, comma, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "end of input", line_, col_});
        return out;
      }
      int line = line_, col = col_;
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          id += advance();
        out.push_back({Tok::ident, id, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          digits += advance();
        out.push_back({Tok::integer, digits, line, col});
      } else {
        Tok kind;
        switch (c) {
          case ':': kind = Tok::colon; break;
          case ',': kind = Tok::comma; break;
          case '+': kind = Tok::plus; break;
          case '-': kind = Tok::minus; break;
          case '*': kind = Tok::star; break;
          case '^': kind = Tok::caret; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  IdealPresentation document() {
    keyword("vars");
    expect(Tok::colon, "':'");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    do {
      const Token& t = expect(Tok::ident, "variable name");
      if (t.text == "vars" || t.text == "ideal")
        throw ParseError("'" + t.text + "' is reserved", t.line, t.column);
      if (!seen.insert(t.text).second)
        throw ParseError("duplicate variable '" + t.text + "'", t.line, t.column);
      vars.push_back(t.text);
    } while (accept(Tok::comma));
    if (vars.size() < 2)
      throw ParseError("need at least two variables (projective space of dimension >= 1)",
                       peek().line, peek().column);
    if (vars.size() > kMaxUserVars)
      throw ParseError("at most " + std::to_string(kMaxUserVars) + " variables supported",
                       peek().line, peek().column);
    vars_ = &vars;

    keyword("ideal");
    expect(Tok::colon, "':'");
    std::vector<QPolynomial> gens;
    do {
      const Token& start = peek();
      QPolynomial f = polynomial();
      if (f.is_zero())
        throw Error(ErrorKind::invalid_input, "generator " + std::to_string(gens.size() + 1) +
                                                  " (line " + std::to_string(start.line) +
                                                  ") is the zero polynomial");
      if (!f.is_homogeneous())
        throw Error(ErrorKind::invalid_input,
                    "generator " + std::to_string(gens.size() + 1) + " (line " +
                        std::to_string(start.line) + ") is not homogeneous: " +
                        f.to_string(vars));
      gens.push_back(std::move(f));
    } while (accept(Tok::comma));
    expect(Tok::end, "',' or end of input");
    return IdealPresentation(std::move(vars), std::move(gens));
  }

  QPolynomial single(const std::vector<std::string>& vars) {
    vars_ = &vars;
    QPolynomial f = polynomial();
    expect(Tok::end, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ParseError("expected " + what + ", found '" + t.text + "'", t.line, t.column);
    ++pos_;
    return t;
  }

  void keyword(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != word)
      throw ParseError("expected '" + word + ":'", t.line, t.column);
    ++pos_;
  }

  QPolynomial zero() const { return QPolynomial(RationalField{}, vars_->size()); }

  QPolynomial polynomial() {
    QPolynomial acc = zero();
    bool negate = false;
    if (accept(Tok::minus)) negate = true;
    else accept(Tok::plus);
    QPolynomial t = product();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (accept(Tok::plus)) acc += product();
      else if (accept(Tok::minus)) acc -= product();
      else return acc;
    }
  }

  QPolynomial product() {
    QPolynomial acc = power();
    while (accept(Tok::star)) acc *= power();
    return acc;
  }

  QPolynomial power() {
    QPolynomial base = atom();
    if (!accept(Tok::caret)) return base;
    const Token& e = expect(Tok::integer, "integer exponent");
    if (e.text.size() > 3 || std::stoul(e.text) > kMaxLiteralExponent)
      throw ParseError("exponent larger than " + std::to_string(kMaxLiteralExponent), e.line,
                       e.column);
    unsigned k = static_cast<unsigned>(std::stoul(e.text));
    QPolynomial r = QPolynomial::constant(RationalField{}, vars_->size(), 1);
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
  }

  QPolynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        ++pos_;
        return QPolynomial::constant(RationalField{}, vars_->size(), mpq_class(mpz_class(t.text)));
      }
      case Tok::ident: {
        ++pos_;
        auto it = std::find(vars_->begin(), vars_->end(), t.text);
        if (it == vars_->end())
          throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        return QPolynomial::variable(RationalField{}, vars_->size(),
                                     static_cast<std::size_t>(it - vars_->begin()));
      }
      case Tok::lparen: {
        ++pos_;
        QPolynomial inner = polynomial();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::minus: {
        ++pos_;
        return -power();
      }
      default:
        throw ParseError("expected a term, found '" + t.text + "'", t.line, t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* vars_ = nullptr;
};

}  // namespace

IdealPresentation::IdealPresentation(std::vector<std::string> variables,
                                     std::vector<QPolynomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
  if (variables_.size() < 2)
    throw Error(ErrorKind::invalid_input, "ambient space needs at least two variables");
  if (variables_.size() > kMaxUserVars)
    throw Error(ErrorKind::invalid_input, "too many variables");
  if (generators_.empty())
    throw Error(ErrorKind::invalid_input,
                "the zero ideal defines the whole ambient space; a proper subscheme is required");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const QPolynomial& g = generators_[i];
    if (g.nvars() != variables_.size())
      throw Error(ErrorKind::dimension_mismatch,
                  "generator " + std::to_string(i + 1) + " has the wrong variable count");
    if (g.is_zero())
      throw Error(ErrorKind::invalid_input,
                  "generator " + std::to_string(i + 1) + " is the zero polynomial");
    if (!g.is_homogeneous())
      throw Error(ErrorKind::invalid_input,
                  "generator " + std::to_string(i + 1) + " is not homogeneous");
  }
}

std::vector<int> IdealPresentation::degrees() const {
  std::vector<int> out;
  for (const auto& g : generators_) out.push_back(g.total_degree());
  return out;
}

int IdealPresentation::max_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.total_degree());
  return d;
}

bool IdealPresentation::has_unit_generator() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const QPolynomial& g) { return g.is_constant(); });
}

std::string IdealPresentation::generators_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string(variables_);
  }
  return out;
}

std::string IdealPresentation::to_string() const {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += variables_[i];
  }
  return out + "\nideal: " + generators_string() + "\n";
}

IdealPresentation parse_ideal_file(std::string_view text) {
  return Parser(Lexer(text).run()).document();
}

QPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(Lexer(text).run()).single(variables);
}

IdealPresentation partial_derivatives(const QPolynomial& f,
                                      const std::vector<std::string>& variables) {
  if (f.is_constant())
    throw Error(ErrorKind::invalid_input, "partial derivatives of a constant polynomial");
  std::vector<QPolynomial> parts;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    QPolynomial d = f.derivative(i);
    if (!d.is_zero()) parts.push_back(std::move(d));
  }
  return IdealPresentation(variables, std::move(parts));
}

IdealPresentation product_ideal(const std::vector<IdealPresentation>& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::invalid_input, "product of no ideals");
  std::vector<QPolynomial> acc = ideals.front().generators();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    if (ideals[k].variables() != ideals.front().variables())
      throw Error(ErrorKind::dimension_mismatch, "product of ideals in different rings");
    std::vector<QPolynomial> next;
    for (const auto& a : acc)
      for (const auto& b : ideals[k].generators()) {
        QPolynomial ab = a * b;
        if (std::find(next.begin(), next.end(), ab) == next.end()) next.push_back(std::move(ab));
      }
    acc = std::move(next);
  }
  return ideals.front().with_generators(std::move(acc));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      m.set(var, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (nvars == 0) return out;
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
  return out;
}

std::vector<QPolynomial> graded_piece(const IdealPresentation& ideal, int degree) {
  if (degree < ideal.max_degree())
    throw Error(ErrorKind::invalid_input, "degree " + std::to_string(degree) +
                                              " is below the generator degree " +
                                              std::to_string(ideal.max_degree()));
  std::vector<QPolynomial> out;
  for (const auto& g : ideal.generators()) {
    for (const Monomial& m : monomials_of_degree(ideal.nvars(),
                                                 static_cast<unsigned>(degree - g.total_degree())))
      out.push_back(g.times_monomial(m));
  }
  return out;
}

}  // namespace charclass
