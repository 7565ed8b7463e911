#pragma once

// Line-oriented text format for algebra definitions:
//
//   # comment
//   field GF(5)            | field Q
//   dim 3
//   basis h e f
//   [h, e] = 2*e
//   [h, f] = -2*f
//   [e, f] = h
//   subspace B = span(h, e + f)
//
// or `preset name(args)` instead of dim/basis/brackets. Unlisted brackets are
// zero. Scalars are integers (reduced mod p) or n/d over Q.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lieideal/corpus.hpp"
#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"

namespace lieideal {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};
class UnknownLabelError : public ParseError {
 public:
  using ParseError::ParseError;
};
class DuplicateBracketError : public ParseError {
 public:
  using ParseError::ParseError;
};
class AntisymmetryError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct SourcePos {
  std::size_t line = 0, column = 0;
};

/// coefficient * label; an empty coefficient means 1.
struct Term {
  bool negative = false;
  std::string coeff;
  std::string label;
  SourcePos pos;
};

using Expr = std::vector<Term>;

struct BracketDecl {
  std::string left, right;
  SourcePos left_pos, right_pos, pos;
  Expr value;
};

struct SubspaceDecl {
  std::string name;
  std::vector<Expr> generators;
  SourcePos pos;
};

struct AlgebraDocument {
  std::optional<FieldDescriptor> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  std::vector<BracketDecl> brackets;
  std::optional<PresetSpec> preset;
  std::vector<SubspaceDecl> subspaces;
  SourcePos field_pos, dim_pos, basis_pos, preset_pos;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineLexer {
 public:
  LineLexer(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  SourcePos here() const { return {line_, pos_ + 1}; }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident(const char* what = "a label") {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail(std::string("expected ") + what);
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  // digits, optionally followed by /digits
  std::string scalar() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) fail("expected a denominator");
    }
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string rest() {
    skip_ws();
    auto r = std::string(s_.substr(pos_));
    pos_ = s_.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
  void end() {
    if (!done()) fail("unexpected trailing text");
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, pos_ + 1, what); }

  // sum of terms, or a lone 0
  Expr expr() {
    Expr out;
    skip_ws();
    if (peek() == '0') {
      auto save = pos_;
      auto lit = scalar();
      if (lit == "0" && (done() || peek() == ',' || peek() == ')')) return out;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      Term t;
      t.pos = here();
      if (accept('-'))
        t.negative = true;
      else if (!first && !accept('+'))
        break;
      else if (first)
        accept('+');
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff = scalar();
        expect('*');
      }
      skip_ws();
      t.pos = here();
      t.label = ident();
      out.push_back(std::move(t));
      first = false;
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline FieldDescriptor parse_field_name(LineLexer& lx) {
  auto name = lx.ident("a field name");
  if (name == "Q") return FieldDescriptor::rationals();
  if (name != "GF") lx.fail("unknown field '" + name + "' (use GF(p) or Q)");
  lx.expect('(');
  auto pos = lx.here();
  auto p = lx.scalar();
  lx.expect(')');
  try {
    return FieldDescriptor::prime(static_cast<unsigned>(std::stoul(p)));
  } catch (const FieldError& e) {
    throw SyntaxError(pos.line, pos.column, e.what());
  } catch (const std::exception&) {
    throw SyntaxError(pos.line, pos.column, "bad prime '" + p + "'");
  }
}

}  // namespace detail

inline AlgebraDocument parse_document(std::string_view text) {
  AlgebraDocument doc;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    detail::LineLexer lx(line, line_no);
    if (lx.done()) continue;
    auto pos = lx.here();
    if (lx.peek() == '[') {
      BracketDecl b;
      b.pos = pos;
      lx.expect('[');
      lx.skip_ws();
      b.left_pos = lx.here();
      b.left = lx.ident();
      lx.expect(',');
      lx.skip_ws();
      b.right_pos = lx.here();
      b.right = lx.ident();
      lx.expect(']');
      lx.expect('=');
      b.value = lx.expr();
      lx.end();
      doc.brackets.push_back(std::move(b));
      continue;
    }
    auto kw = lx.ident("a statement");
    if (kw == "field") {
      if (doc.field) throw SyntaxError(pos.line, pos.column, "field declared twice");
      doc.field = detail::parse_field_name(lx);
      doc.field_pos = pos;
      lx.end();
    } else if (kw == "dim") {
      if (doc.dim) throw SyntaxError(pos.line, pos.column, "dim declared twice");
      auto n = lx.scalar();
      if (n.find('/') != std::string::npos) lx.fail("dim must be an integer");
      doc.dim = std::stoul(n);
      doc.dim_pos = pos;
      lx.end();
    } else if (kw == "basis") {
      if (!doc.basis.empty()) throw SyntaxError(pos.line, pos.column, "basis declared twice");
      doc.basis_pos = pos;
      while (!lx.done()) {
        auto lp = lx.here();
        auto l = lx.ident();
        for (const auto& prev : doc.basis)
          if (prev == l) throw SyntaxError(lp.line, lp.column, "basis label '" + l + "' repeated");
        doc.basis.push_back(std::move(l));
      }
      if (doc.basis.empty()) lx.fail("basis needs at least one label");
    } else if (kw == "preset") {
      if (doc.preset) throw SyntaxError(pos.line, pos.column, "preset given twice");
      doc.preset_pos = pos;
      auto body = lx.rest();
      try {
        doc.preset = parse_preset(body);
      } catch (const PreconditionError& e) {
        throw SyntaxError(pos.line, pos.column, e.what());
      }
    } else if (kw == "subspace") {
      SubspaceDecl s;
      s.pos = pos;
      s.name = lx.ident("a subspace name");
      lx.expect('=');
      if (lx.ident("span") != "span") lx.fail("expected span(...)");
      lx.expect('(');
      if (!lx.accept(')')) {
        do {
          s.generators.push_back(lx.expr());
        } while (lx.accept(','));
        lx.expect(')');
      }
      lx.end();
      for (const auto& prev : doc.subspaces)
        if (prev.name == s.name) throw SyntaxError(pos.line, pos.column, "subspace '" + s.name + "' defined twice");
      doc.subspaces.push_back(std::move(s));
    } else {
      throw SyntaxError(pos.line, pos.column, "unknown statement '" + kw + "'");
    }
  }
  if (doc.preset && (doc.dim || !doc.basis.empty() || !doc.brackets.empty()))
    throw SyntaxError(doc.preset_pos.line, doc.preset_pos.column, "preset cannot be combined with dim, basis or brackets");
  return doc;
}

/// The field a document lives over: its field line, or the one its preset implies.
inline FieldDescriptor document_field(const AlgebraDocument& doc) {
  std::optional<FieldDescriptor> implied;
  if (doc.preset) {
    try {
      implied = preset_field(*doc.preset);
    } catch (const PreconditionError& e) {
      throw SyntaxError(doc.preset_pos.line, doc.preset_pos.column, e.what());
    }
  }
  if (doc.field && implied && !(*doc.field == *implied))
    throw SyntaxError(doc.field_pos.line, doc.field_pos.column,
                      "field " + doc.field->name() + " conflicts with preset over " + implied->name());
  if (doc.field) return *doc.field;
  if (implied) return *implied;
  throw SyntaxError(1, 1, "missing field declaration");
}

namespace detail {

template <Field F>
Vec<F> eval_expr(const F& f, const Expr& e, const std::vector<std::string>& labels) {
  Vec<F> v(labels.size(), f.zero());
  for (const auto& t : e) {
    std::size_t k = 0;
    while (k < labels.size() && labels[k] != t.label) ++k;
    if (k == labels.size()) throw UnknownLabelError(t.pos.line, t.pos.column, "unknown label '" + t.label + "'");
    typename F::value_type c = f.one();
    if (!t.coeff.empty()) {
      try {
        c = f.parse(t.coeff);
      } catch (const FieldError& err) {
        throw SyntaxError(t.pos.line, t.pos.column, err.what());
      }
    }
    if (t.negative) c = f.neg(c);
    v[k] = f.add(v[k], c);
  }
  return v;
}

inline std::size_t label_index(const std::vector<std::string>& labels, const std::string& l, SourcePos p) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == l) return k;
  throw UnknownLabelError(p.line, p.column, "unknown label '" + l + "'");
}

}  // namespace detail

/// Builds the validated algebra (and named subspaces) a document describes.
/// Throws the ParseError subclasses above or JacobiError.
template <Field F>
BuiltAlgebra<F> realize(const AlgebraDocument& doc, const F& f) {
  if (!(document_field(doc) == f.descriptor())) throw FieldError("document is not over " + f.descriptor().name());
  BuiltAlgebra<F> out{LieAlgebra<F>::abelian(f, 0), {}, {}};
  if (doc.preset) {
    try {
      out = build(*doc.preset, f);
    } catch (const PreconditionError& e) {
      throw SyntaxError(doc.preset_pos.line, doc.preset_pos.column, e.what());
    }
  } else {
    std::vector<std::string> labels = doc.basis;
    std::size_t n = doc.dim ? *doc.dim : labels.size();
    if (!doc.dim && labels.empty()) throw SyntaxError(1, 1, "missing dim or basis");
    if (labels.empty())
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != n)
      throw SyntaxError(doc.basis_pos.line, doc.basis_pos.column,
                        "basis has " + std::to_string(labels.size()) + " labels but dim is " + std::to_string(n));
    std::vector<typename LieAlgebra<F>::Bracket> table;
    std::map<std::pair<std::size_t, std::size_t>, SourcePos> seen;
    for (const auto& b : doc.brackets) {
      auto i = detail::label_index(labels, b.left, b.left_pos);
      auto j = detail::label_index(labels, b.right, b.right_pos);
      auto v = detail::eval_expr(f, b.value, labels);
      if (i == j) {
        if (!is_zero_vector(f, v))
          throw AntisymmetryError(b.pos.line, b.pos.column,
                                  "[" + b.left + ", " + b.right + "] must be zero (antisymmetry)");
        continue;
      }
      auto key = std::minmax(i, j);
      if (auto it = seen.find(key); it != seen.end())
        throw DuplicateBracketError(b.pos.line, b.pos.column,
                                    "bracket [" + labels[key.first] + ", " + labels[key.second] +
                                        "] already defined on line " + std::to_string(it->second.line));
      seen.emplace(key, b.pos);
      table.push_back({i, j, std::move(v)});
    }
    out.algebra = LieAlgebra<F>::create(f, n, table, labels);
  }
  for (const auto& s : doc.subspaces) {
    std::vector<Vec<F>> rows;
    for (const auto& g : s.generators) rows.push_back(detail::eval_expr(f, g, out.algebra.labels()));
    out.subspaces.insert_or_assign(s.name, span(f, out.algebra.dim(), std::move(rows)));
  }
  return out;
}

/// A parsed algebra over whichever field its document names.
struct LoadedAlgebra {
  std::variant<BuiltAlgebra<PrimeField>, BuiltAlgebra<RationalField>> built;

  FieldDescriptor field() const {
    return std::visit([](const auto& b) { return b.algebra.field().descriptor(); }, built);
  }
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), built);
  }
};

inline LoadedAlgebra load_algebra(std::string_view text) {
  auto doc = parse_document(text);
  auto fd = document_field(doc);
  if (fd.is_finite()) return {realize(doc, PrimeField(fd.modulus()))};
  return {realize(doc, RationalField{})};
}

namespace detail {
template <Field F>
std::string format_expr(const F& f, const Vec<F>& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (f.is_zero(v[k])) continue;
    auto c = v[k];
    bool neg = false;
    if constexpr (!F::is_finite()) {
      if (c < 0) {
        neg = true;
        c = -c;
      }
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!(c == f.one())) out += f.to_string(c) + "*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}
}  // namespace detail

/// Inverse of parse: re-parsing yields the same structure constants.
template <Field F>
std::string print_document(const LieAlgebra<F>& L, const std::map<std::string, Subspace<F>>& subspaces = {}) {
  const auto& f = L.field();
  std::ostringstream os;
  os << "field " << f.descriptor().name() << "\n";
  os << "dim " << L.dim() << "\n";
  if (L.dim() > 0) {
    os << "basis";
    for (const auto& l : L.labels()) os << ' ' << l;
    os << "\n";
  }
  for (const auto& b : L.brackets())
    os << '[' << L.labels()[b.i] << ", " << L.labels()[b.j] << "] = " << detail::format_expr(f, b.value, L.labels())
       << "\n";
  for (const auto& [name, s] : subspaces) {
    os << "subspace " << name << " = span(";
    bool first = true;
    for (const auto& row : s.basis()) {
      os << (first ? "" : ", ") << detail::format_expr(f, row, L.labels());
      first = false;
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace lieideal
