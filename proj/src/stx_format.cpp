#include "stx/stx_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace stx {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw ParseError(line, col, msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

long long to_ll(const std::string& s, int line, int col) {
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    fail(line, col, "integer out of range: " + s);
  }
}

// One '*'-separated product of atoms; returns the factor as a polynomial.
SuperPoly parse_factor(const std::string& text, const GeneratorSetPtr& gens, const Field& f,
                       int line, int col) {
  SuperPoly out = SuperPoly::unit(gens, f);
  size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string atom = trim(text.substr(pos, star == std::string::npos ? std::string::npos
                                                                       : star - pos));
    if (atom.empty()) fail(line, col, "empty factor in expression");
    any = true;

    if (is_integer(atom)) {
      out = out.scaled(Scalar::of(f, to_ll(atom, line, col)));
    } else if (auto slash = atom.find('/'); slash != std::string::npos) {
      std::string num = trim(atom.substr(0, slash)), den = trim(atom.substr(slash + 1));
      if (!is_integer(num) || !is_integer(den)) fail(line, col, "malformed fraction: " + atom);
      out = out.scaled(Scalar::fraction(f, to_ll(num, line, col), to_ll(den, line, col)));
    } else {
      std::string name = atom;
      long long exp = 1;
      if (auto caret = atom.find('^'); caret != std::string::npos) {
        name = trim(atom.substr(0, caret));
        std::string es = trim(atom.substr(caret + 1));
        if (!is_integer(es)) fail(line, col, "malformed exponent: " + atom);
        exp = to_ll(es, line, col);
      }
      if (!is_ident(name)) fail(line, col, "malformed atom: " + atom);
      int gi = gens->index_of(name);
      if (gi < 0) fail(line, col, "unknown generator: " + name);
      if (exp < 0) {
        const Generator& g = gens->gen(gi);
        int inverse = g.is_alias() ? g.inverse_of : g.inverse_alias;
        if (inverse < 0) fail(line, col, name + " is not invertible; negative exponent rejected");
        gi = inverse;
        exp = -exp;
      }
      out = out * pow(SuperPoly::of_generator(gens, f, gi), static_cast<int>(exp));
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  if (!any) fail(line, col, "empty factor in expression");
  return out;
}

// A +/- separated sum of '#'-separated tensor terms.
TensorElement parse_expr(const std::string& text, const GeneratorSetPtr& gens, const Field& f,
                         int arity, int line, int col) {
  TensorElement out = TensorElement::zero(gens, f, arity);
  size_t pos = 0;
  bool expect_term = true;
  bool negative = false;
  while (pos < text.size() || expect_term) {
    // consume sign
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    // A +/- splits terms unless it trails '^' (an exponent's sign).
    size_t term_end = pos;
    char prev = 0;
    for (; term_end < text.size(); ++term_end) {
      char c = text[term_end];
      if ((c == '+' || c == '-') && prev != '^') break;
      if (c != ' ' && c != '\t') prev = c;
    }
    std::string term = trim(text.substr(pos, term_end - pos));
    if (term.empty()) fail(line, col, "empty term in expression");

    std::vector<SuperPoly> slots;
    size_t fp = 0;
    while (true) {
      size_t hash = term.find('#', fp);
      std::string piece =
          trim(term.substr(fp, hash == std::string::npos ? std::string::npos : hash - fp));
      slots.push_back(parse_factor(piece, gens, f, line, col));
      if (hash == std::string::npos) break;
      fp = hash + 1;
    }
    if (static_cast<int>(slots.size()) != arity)
      fail(line, col,
           "expected " + std::to_string(arity) + " tensor factors, got " +
               std::to_string(slots.size()));
    TensorElement t = TensorElement::pure(slots);
    out = negative ? out - t : out + t;

    pos = term_end;
    expect_term = false;
    negative = false;
    if (pos >= text.size()) break;
  }
  return out;
}

struct GenDecl {
  std::string name;
  bool odd = false;
  std::string inverse;  // empty unless invertible
  int line = 1;
};

struct BlockData {
  int arity = 0;
  bool scalar_target = false;  // counit / cozero land in the scalars
  int header_line = 0;
  std::vector<std::pair<int, TensorElement>> images;  // generator index -> image
};

}  // namespace

CotrussPresentation parse_stx(const std::string& text, const std::string& name) {
  std::optional<Field> field;
  std::vector<GenDecl> decls;
  bool gens_frozen = false;
  GeneratorSetPtr gens;
  GeneratorSetPtr scalars = empty_generators();

  std::map<std::string, BlockData> blocks;
  BlockData* current = nullptr;
  std::string current_name;

  auto freeze = [&](int line) {
    if (gens_frozen) return;
    if (!field) fail(line, 1, "scalar field must be declared before any block");
    auto gs = std::make_shared<GeneratorSet>();
    for (const GenDecl& d : decls) {
      if (d.odd)
        gs->add_odd(d.name);
      else if (d.inverse.empty())
        gs->add_even(d.name);
      else
        gs->add_invertible(d.name, d.inverse);
    }
    gens = gs;
    gens_frozen = true;
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto sc = raw.find(';'); sc != std::string::npos) raw = raw.substr(0, sc);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (head == "scalar") {
      if (field) fail(line_no, 1, "duplicate scalar declaration");
      if (gens_frozen) fail(line_no, 1, "scalar declaration must precede the blocks");
      std::string kind;
      ls >> kind;
      if (kind == "QQ") {
        field = Field::rationals();
      } else if (kind == "FP") {
        long long p = 0;
        if (!(ls >> p) || p < 2) fail(line_no, 8, "FP needs a prime modulus");
        try {
          field = Field::prime(static_cast<std::uint64_t>(p));
        } catch (const InputError& e) {
          fail(line_no, 8, e.what());
        }
      } else {
        fail(line_no, 8, "scalar kind must be QQ or FP <p>");
      }
      std::string extra;
      if (ls >> extra) fail(line_no, 1, "trailing tokens after scalar declaration");
      continue;
    }

    if (head == "gen") {
      if (gens_frozen) fail(line_no, 1, "generator declarations must precede the blocks");
      GenDecl d;
      d.line = line_no;
      std::string parity;
      if (!(ls >> d.name >> parity)) fail(line_no, 5, "gen needs a name and a parity");
      if (!is_ident(d.name)) fail(line_no, 5, "malformed generator name: " + d.name);
      for (const GenDecl& prev : decls)
        if (prev.name == d.name || prev.inverse == d.name)
          fail(line_no, 5, "duplicate generator name: " + d.name);
      if (parity == "odd") {
        d.odd = true;
        std::string extra;
        if (ls >> extra) {
          if (extra == "invertible")
            fail(line_no, static_cast<int>(line.find("invertible")) + 1,
                 "odd generators cannot be invertible");
          fail(line_no, 1, "trailing tokens after gen declaration");
        }
      } else if (parity == "even") {
        std::string word;
        if (ls >> word) {
          if (word != "invertible") fail(line_no, 1, "expected 'invertible', got: " + word);
          if (!(ls >> d.inverse) || !is_ident(d.inverse))
            fail(line_no, 1, "invertible needs an inverse name");
          for (const GenDecl& prev : decls)
            if (prev.name == d.inverse || prev.inverse == d.inverse)
              fail(line_no, 1, "duplicate generator name: " + d.inverse);
          if (d.inverse == d.name) fail(line_no, 1, "inverse name equals the generator name");
          std::string extra;
          if (ls >> extra) fail(line_no, 1, "trailing tokens after gen declaration");
        }
      } else {
        fail(line_no, static_cast<int>(line.find(parity)) + 1,
             "parity must be even or odd, got: " + parity);
      }
      decls.push_back(std::move(d));
      continue;
    }

    if (head == "delta2" || head == "delta3" || head == "counit" || head == "cozero") {
      std::string extra;
      if (ls >> extra) fail(line_no, 1, "trailing tokens after block header");
      if (blocks.count(head)) fail(line_no, 1, "duplicate block: " + head);
      freeze(line_no);
      BlockData b;
      b.arity = head == "delta2" ? 2 : head == "delta3" ? 3 : 1;
      b.scalar_target = head == "counit" || head == "cozero";
      b.header_line = line_no;
      current = &blocks.emplace(head, std::move(b)).first->second;
      current_name = head;
      continue;
    }

    auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      if (!current) fail(line_no, 1, "image line outside any block");
      std::string gname = trim(line.substr(0, arrow));
      if (!is_ident(gname)) fail(line_no, 1, "malformed generator name: " + gname);
      int gi = gens->index_of(gname);
      if (gi < 0) fail(line_no, 1, "unknown generator: " + gname);
      if (gens->gen(gi).is_alias())
        fail(line_no, 1, "the image of " + gname + " is derived from its inverse pairing");
      for (const auto& [idx, img] : current->images)
        if (idx == gi) fail(line_no, 1, "duplicate image for generator " + gname);
      int ecol = static_cast<int>(arrow) + 3;
      const GeneratorSetPtr& target = current->scalar_target ? scalars : gens;
      TensorElement img = parse_expr(line.substr(arrow + 2), target, *field, current->arity,
                                     line_no, ecol);
      current->images.emplace_back(gi, std::move(img));
      continue;
    }

    fail(line_no, 1, "unrecognized line: " + line);
  }

  if (!field) fail(line_no + 1, 1, "missing scalar declaration");
  freeze(line_no + 1);
  if (!blocks.count("delta2")) fail(line_no + 1, 1, "missing delta2 block");
  if (!blocks.count("delta3")) fail(line_no + 1, 1, "missing delta3 block");

  auto build = [&](const std::string& bname) {
    const BlockData& b = blocks.at(bname);
    const GeneratorSetPtr& target = b.scalar_target ? scalars : gens;
    std::vector<TensorElement> images(gens->count(), TensorElement::zero(target, *field, b.arity));
    std::vector<bool> given(gens->count(), false);
    for (const auto& [gi, img] : b.images) {
      images[gi] = img;
      given[gi] = true;
    }
    for (int i = 0; i < gens->count(); ++i)
      if (!gens->gen(i).is_alias() && !given[i])
        fail(b.header_line, 1, bname + " block is missing the image of " + gens->gen(i).name);
    GenHom hom(gens, target, *field, b.arity, std::move(images));
    if (!hom.violations().empty()) {
      std::string msg = bname + " is not well defined";
      for (const std::string& v : hom.violations()) msg += "; " + v;
      fail(b.header_line, 1, msg);
    }
    return hom;
  };

  CotrussPresentation P{name,
                        gens,
                        *field,
                        build("delta2"),
                        build("delta3"),
                        blocks.count("counit") ? std::optional<GenHom>(build("counit"))
                                               : std::nullopt,
                        blocks.count("cozero") ? std::optional<GenHom>(build("cozero"))
                                               : std::nullopt};
  return P;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

CotrussPresentation parse_stx_file(const std::string& path) {
  return parse_stx(read_file(path), file_stem(path));
}

GenHom parse_morphism(const std::string& text, const GeneratorSetPtr& source,
                      const GeneratorSetPtr& target, const Field& field) {
  std::vector<TensorElement> images(source->count(), TensorElement::zero(target, field, 1));
  std::vector<bool> given(source->count(), false);
  bool in_block = false;
  int header_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto sc = raw.find(';'); sc != std::string::npos) raw = raw.substr(0, sc);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line == "map") {
      if (in_block) fail(line_no, 1, "duplicate map block");
      in_block = true;
      header_line = line_no;
      continue;
    }
    auto arrow = line.find("->");
    if (!in_block || arrow == std::string::npos) fail(line_no, 1, "unrecognized line: " + line);
    std::string gname = trim(line.substr(0, arrow));
    int gi = source->index_of(gname);
    if (gi < 0) fail(line_no, 1, "unknown source generator: " + gname);
    if (source->gen(gi).is_alias())
      fail(line_no, 1, "the image of " + gname + " is derived from its inverse pairing");
    if (given[gi]) fail(line_no, 1, "duplicate image for generator " + gname);
    images[gi] = parse_expr(line.substr(arrow + 2), target, field, 1, line_no,
                            static_cast<int>(arrow) + 3);
    given[gi] = true;
  }
  if (!in_block) fail(line_no + 1, 1, "missing map block");
  for (int i = 0; i < source->count(); ++i)
    if (!source->gen(i).is_alias() && !given[i])
      fail(header_line, 1, "map block is missing the image of " + source->gen(i).name);
  GenHom hom(source, target, field, 1, std::move(images));
  if (!hom.violations().empty()) {
    std::string msg = "map is not well defined";
    for (const std::string& v : hom.violations()) msg += "; " + v;
    fail(header_line, 1, msg);
  }
  return hom;
}

GenHom parse_morphism_file(const std::string& path, const GeneratorSetPtr& source,
                           const GeneratorSetPtr& target, const Field& field) {
  return parse_morphism(read_file(path), source, target, field);
}

std::string render_stx(const CotrussPresentation& P) {
  std::ostringstream os;
  os << "scalar " << (P.field.is_prime_field() ? P.field.to_string() : "QQ") << "\n";
  for (int i = 0; i < P.gens->count(); ++i) {
    const Generator& g = P.gens->gen(i);
    if (g.is_alias()) continue;
    os << "gen " << g.name;
    if (g.odd)
      os << " odd";
    else if (g.invertible())
      os << " even invertible " << P.gens->gen(g.inverse_alias).name;
    else
      os << " even";
    os << "\n";
  }
  auto block = [&](const std::string& bname, const GenHom& hom) {
    os << bname << "\n";
    for (int i = 0; i < P.gens->count(); ++i) {
      if (P.gens->gen(i).is_alias()) continue;
      os << "  " << P.gens->gen(i).name << " -> " << hom.image(i).to_string() << "\n";
    }
  };
  block("delta2", P.delta2);
  block("delta3", P.delta3);
  if (P.counit) block("counit", *P.counit);
  if (P.cozero) block("cozero", *P.cozero);
  return os.str();
}

bool presentations_equal(const CotrussPresentation& a, const CotrussPresentation& b) {
  if (a.field != b.field) return false;
  if (a.gens->count() != b.gens->count()) return false;
  for (int i = 0; i < a.gens->count(); ++i) {
    const Generator &ga = a.gens->gen(i), &gb = b.gens->gen(i);
    if (ga.name != gb.name || ga.odd != gb.odd || ga.inverse_of != gb.inverse_of ||
        ga.inverse_alias != gb.inverse_alias)
      return false;
  }
  auto hom_equal = [&](const GenHom& x, const GenHom& y) {
    if (x.arity() != y.arity()) return false;
    for (int i = 0; i < a.gens->count(); ++i)
      if (x.image(i) != y.image(i)) return false;
    return true;
  };
  if (!hom_equal(a.delta2, b.delta2) || !hom_equal(a.delta3, b.delta3)) return false;
  if (a.counit.has_value() != b.counit.has_value()) return false;
  if (a.counit && !hom_equal(*a.counit, *b.counit)) return false;
  if (a.cozero.has_value() != b.cozero.has_value()) return false;
  if (a.cozero && !hom_equal(*a.cozero, *b.cozero)) return false;
  return true;
}

}  // namespace stx
