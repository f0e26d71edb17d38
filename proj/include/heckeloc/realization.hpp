#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeloc/coxeter.hpp"
#include "heckeloc/quantum.hpp"

namespace heckeloc {

// A realization: Coxeter system plus Cartan entries a_st over a coefficient
// field. Only the span-of-simple-roots data is kept; the polynomial ring has
// one variable per simple reflection. Construction verifies the defining
// requirement that [m]_s and [m]_t specialize to zero for every finite m_st.

struct LinearForm {
  std::vector<Scalar> coeffs;  // one per simple root

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

class Realization {
 public:
  Realization(CoxeterSystem cox, FieldPtr field, std::vector<std::vector<Scalar>> cartan,
              std::vector<std::string> gen_names = {}, std::string name = "custom")
      : cox_(std::move(cox)),
        words_(std::make_shared<WordCtx>(cox_)),
        field_(std::move(field)),
        cartan_(std::move(cartan)),
        name_(std::move(name)) {
    const int r = cox_.rank;
    if (static_cast<int>(cartan_.size()) != r)
      throw std::invalid_argument("cartan matrix rank mismatch");
    for (auto& row : cartan_)
      if (static_cast<int>(row.size()) != r)
        throw std::invalid_argument("cartan matrix rank mismatch");
    gen_names_ = std::move(gen_names);
    if (gen_names_.empty()) {
      static const char* abc[] = {"s", "t", "u"};
      for (int i = 0; i < r; ++i)
        gen_names_.push_back(r <= 3 ? abc[i] : "s" + std::to_string(i));
    }
    std::vector<std::string> vars;
    for (auto& g : gen_names_) vars.push_back("a_" + g);
    ring_ = PolyRing::make(field_, vars);
    validate();
  }

  const CoxeterSystem& cox() const { return cox_; }
  const std::shared_ptr<WordCtx>& words() const { return words_; }
  const FieldPtr& field() const { return field_; }
  const RingPtr& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  int rank() const { return cox_.rank; }

  int gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names_.size(); ++i)
      if (gen_names_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator name: " + name);
  }

  const Scalar& cartan(int s, int t) const { return cartan_[s][t]; }

  // x_s -> -a_st, x_t -> -a_ts for the pair (s, t).
  Scalar x_of(int s, int t) const { return -cartan_[s][t]; }

  Scalar qnum_at(int s, int t, long long n, QColor c) const {
    return qspecialize(qnum(n, c), x_of(s, t), x_of(t, s));
  }

  // --- the W-action ---

  LinearForm alpha(int s) const {
    LinearForm f;
    f.coeffs.assign(cox_.rank, Scalar::zero(field_));
    f.coeffs[s] = Scalar::one(field_);
    return f;
  }

  // s(f) = f - (sum_t c_t a_st) alpha_s, with a_ss = 2.
  LinearForm reflect(int s, const LinearForm& f) const {
    Scalar pairing = f.coeffs[s] + f.coeffs[s];  // a_ss = 2
    for (int t = 0; t < cox_.rank; ++t)
      if (t != s) pairing = pairing + f.coeffs[t] * cartan_[s][t];
    LinearForm g = f;
    g.coeffs[s] = g.coeffs[s] - pairing;
    return g;
  }

  // w(f) for w = s_1 ... s_d: rightmost letter acts first.
  LinearForm act(const CoxWord& w, const LinearForm& f) const {
    LinearForm g = f;
    for (std::size_t i = w.size(); i-- > 0;) g = reflect(w[i], g);
    return g;
  }

  Poly form_to_poly(const LinearForm& f) const {
    Poly p = Poly::zero(ring_);
    for (int i = 0; i < cox_.rank; ++i)
      if (!f.coeffs[i].is_zero()) p = p + Poly::variable(ring_, i) * f.coeffs[i];
    return p;
  }

  Poly act_on_poly(const CoxWord& w, const Poly& p) const {
    std::vector<Poly> images;
    for (int i = 0; i < cox_.rank; ++i)
      images.push_back(form_to_poly(act(w, alpha(i))));
    return p.substitute(images);
  }

  Frac act_on_frac(const CoxWord& w, const Frac& f) const {
    return Frac(act_on_poly(w, f.num()), act_on_poly(w, f.den()));
  }

  // --- roots ---

  // beta_w = s_1 s_2 ... s_{d-1} (alpha_{s_d}).
  LinearForm beta(const CoxWord& w) const {
    if (w.empty()) throw std::invalid_argument("beta of the empty word");
    CoxWord prefix(w.begin(), w.end() - 1);
    return act(prefix, alpha(w.back()));
  }

  // beta_e = s_1^{e_1} ... s_{d-1}^{e_{d-1}} (alpha_{s_d}); e_d is irrelevant.
  LinearForm beta_sub(const CoxWord& w, const Subexpression& e) const {
    if (w.empty()) throw std::invalid_argument("beta of the empty word");
    if (w.size() != e.bits.size()) throw std::invalid_argument("beta_sub: length mismatch");
    LinearForm f = alpha(w.back());
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (e.bits[i]) f = reflect(w[i], f);
    return f;
  }

  // pi_{s,t}: product of the roots of the leading subexpressions of
  // (s,t,s,...) of length m; a product of m linear forms, degree 2m.
  Poly pi(int s, int t) const {
    int m = cox_.m[s][t];
    if (m == 0) throw std::invalid_argument("pi requires m_st < infinity");
    Poly p = Poly::from_int(ring_, 1);
    CoxWord x = alternating_word(s, t, m);
    for (const CoxWord& w : leading_subexpressions(x))
      p = p * form_to_poly(beta(w));
    return p;
  }

  // zeta(e'): product over the word (t,s,t,...) of length m of
  // s_1^{e'_1} ... s_{i-1}^{e'_{i-1}} (alpha_{s_i}).
  Poly zeta(int s, int t, const Subexpression& eprime) const {
    int m = cox_.m[s][t];
    if (m == 0) throw std::invalid_argument("zeta requires m_st < infinity");
    if (static_cast<int>(eprime.bits.size()) != m)
      throw std::invalid_argument("zeta: subexpression length must be m");
    CoxWord y = alternating_word(t, s, m);
    Poly p = Poly::from_int(ring_, 1);
    for (int i = 1; i <= m; ++i) {
      CoxWord prefix(y.begin(), y.begin() + (i - 1));
      Subexpression pe{std::vector<std::uint8_t>(eprime.bits.begin(), eprime.bits.begin() + i)};
      p = p * form_to_poly(beta_sub(CoxWord(y.begin(), y.begin() + i), pe));
    }
    return p;
  }

  // ([m-1]_s, [m-1]_t) specialized at the pair.
  std::pair<Scalar, Scalar> balance_scalar(int s, int t) const {
    int m = cox_.m[s][t];
    if (m == 0) throw std::invalid_argument("balance requires m_st < infinity");
    return {qnum_at(s, t, m - 1, QColor::S), qnum_at(s, t, m - 1, QColor::T)};
  }

  bool is_balanced_pair(int s, int t) const {
    auto [bs, bt] = balance_scalar(s, t);
    return bs.is_one() && bt.is_one();
  }

  bool is_even_balanced() const {
    for (int s = 0; s < cox_.rank; ++s)
      for (int t = s + 1; t < cox_.rank; ++t)
        if (cox_.m[s][t] != 0 && cox_.m[s][t] % 2 == 0 && !is_balanced_pair(s, t))
          return false;
    return true;
  }

  bool is_balanced() const {
    for (int s = 0; s < cox_.rank; ++s)
      for (int t = s + 1; t < cox_.rank; ++t)
        if (cox_.m[s][t] != 0 && !is_balanced_pair(s, t)) return false;
    return true;
  }

  // Minimal k >= 1 with (st)^k acting as the identity on span{alpha_s, alpha_t};
  // 0 encodes "not within the search bound" (only possible for m = infinity).
  int order_on_span(int s, int t) const {
    const Scalar one = Scalar::one(field_), zero = Scalar::zero(field_);
    // Matrices act on column vectors in the basis (alpha_s, alpha_t).
    auto matmul = [&](const std::array<Scalar, 4>& A, const std::array<Scalar, 4>& B) {
      return std::array<Scalar, 4>{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
                                   A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    };
    std::array<Scalar, 4> Ms{-one, -cartan_[s][t], zero, one};
    std::array<Scalar, 4> Mt{one, zero, -cartan_[t][s], -one};
    std::array<Scalar, 4> Mst = matmul(Ms, Mt);
    std::array<Scalar, 4> acc{one, zero, zero, one};
    int m = cox_.m[s][t];
    int bound = m == 0 ? 1000 : m;
    for (int k = 1; k <= bound; ++k) {
      acc = matmul(acc, Mst);
      if (acc[0].is_one() && acc[1].is_zero() && acc[2].is_zero() && acc[3].is_one()) {
        if (m != 0 && m % k != 0)
          throw std::logic_error("order on span does not divide m_st");
        return k;
      }
    }
    return 0;
  }

  std::string render_form(const LinearForm& f) const { return form_to_poly(f).to_string(); }

 private:
  CoxeterSystem cox_;
  std::shared_ptr<WordCtx> words_;
  FieldPtr field_;
  std::vector<std::vector<Scalar>> cartan_;
  std::vector<std::string> gen_names_;
  RingPtr ring_;
  std::string name_;

  void validate() const {
    for (int s = 0; s < cox_.rank; ++s)
      for (int t = s + 1; t < cox_.rank; ++t) {
        int m = cox_.m[s][t];
        if (m == 0) continue;
        Scalar ms = qnum_at(s, t, m, QColor::S);
        Scalar mt = qnum_at(s, t, m, QColor::T);
        if (!ms.is_zero() || !mt.is_zero()) {
          std::ostringstream msg;
          msg << "invalid realization: [" << m << "] does not vanish for the pair ("
              << gen_names_[s] << "," << gen_names_[t] << "): [" << m
              << "]_s = " << ms.to_string() << ", [" << m << "]_t = " << mt.to_string();
          throw std::invalid_argument(msg.str());
        }
      }
  }
};

using RealizationPtr = std::shared_ptr<const Realization>;

// --- field element expression parser (for configs and CLI) ---
// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := '-'* atom ('^' ['-'] digits)?; atom := digits | generator | '(' expr ')'.

class ScalarParser {
 public:
  ScalarParser(FieldPtr field, std::string gen_name)
      : f_(std::move(field)), gen_(std::move(gen_name)) {}

  Scalar parse(const std::string& text) const {
    pos_ = 0;
    src_ = text;
    Scalar v = expr();
    skip();
    if (pos_ != src_.size()) throw std::invalid_argument("trailing input in scalar: " + text);
    return v;
  }

 private:
  FieldPtr f_;
  std::string gen_;
  mutable std::string src_;
  mutable std::size_t pos_ = 0;

  void skip() const {
    while (pos_ < src_.size() && isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) const {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  Scalar expr() const {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  Scalar term() const {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) v = v / factor();
      else return v;
    }
  }

  Scalar factor() const {
    bool neg = false;
    while (eat('-')) neg = !neg;
    Scalar v = atom();
    skip();
    if (eat('^')) {
      bool invert = eat('-');
      long long e = integer();
      Scalar p = Scalar::one(f_);
      for (long long i = 0; i < e; ++i) p = p * v;
      v = invert ? p.inverse() : p;
    }
    return neg ? -v : v;
  }

  Scalar atom() const {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')' in scalar expression");
      return v;
    }
    if (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_])))
      return Scalar::from_rat(f_, Rat(Int(digits())));
    std::string name = ident();
    if (name.empty()) throw std::invalid_argument("bad scalar expression: " + src_);
    if (name == gen_) return Scalar::generator(f_);
    throw std::invalid_argument("unknown symbol '" + name + "' in scalar expression");
  }

  long long integer() const {
    return std::stoll(digits());
  }

  std::string digits() const {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument("expected digits in scalar expression");
    return src_.substr(start, pos_ - start);
  }

  std::string ident() const {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return src_.substr(start, pos_ - start);
  }
};

// --- built-in realizations ---

namespace builtin {

inline RealizationPtr dihedral(int m, const Scalar& ast, const Scalar& ats, FieldPtr f,
                               const std::string& name) {
  CoxeterSystem cs(2, {{1, m}, {m, 1}});
  Scalar two = Scalar::from_int(f, 2);
  return std::make_shared<Realization>(cs, f, std::vector<std::vector<Scalar>>{{two, ast}, {ats, two}},
                                       std::vector<std::string>{"s", "t"}, name);
}

inline RealizationPtr dihedral_int(int m, long long ast, long long ats, const std::string& name,
                                   FieldPtr f = FieldDesc::rationals()) {
  return dihedral(m, Scalar::from_int(f, ast), Scalar::from_int(f, ats), f, name);
}

inline RealizationPtr rank3(std::array<int, 3> ms, std::array<long long, 6> a,
                            const std::string& name, FieldPtr f = FieldDesc::rationals()) {
  // ms = {m_st, m_tu, m_su}; a = {a_st, a_ts, a_tu, a_ut, a_su, a_us}.
  CoxeterSystem cs(3, {{1, ms[0], ms[2]}, {ms[0], 1, ms[1]}, {ms[2], ms[1], 1}});
  auto S = [&](long long v) { return Scalar::from_int(f, v); };
  std::vector<std::vector<Scalar>> cart{
      {S(2), S(a[0]), S(a[4])}, {S(a[1]), S(2), S(a[2])}, {S(a[5]), S(a[3]), S(2)}};
  return std::make_shared<Realization>(cs, f, cart, std::vector<std::string>{"s", "t", "u"}, name);
}

inline RealizationPtr make(const std::string& name) {
  auto QQ = FieldDesc::rationals();
  if (name == "A1") {
    CoxeterSystem cs(1, {{1}});
    return std::make_shared<Realization>(cs, QQ,
        std::vector<std::vector<Scalar>>{{Scalar::from_int(QQ, 2)}},
        std::vector<std::string>{"s"}, name);
  }
  if (name == "A1xA1") return dihedral_int(2, 0, 0, name);
  if (name == "A2") return dihedral_int(3, -1, -1, name);
  if (name == "B2") return dihedral_int(4, -1, -2, name);
  if (name == "G2") return dihedral_int(6, -1, -3, name);
  if (name == "I2(5)") {
    auto f = FieldDesc::number({Rat(-1), Rat(-1), Rat(1)}, "x");  // x^2 - x - 1, x = 2cos(pi/5)
    Scalar x = Scalar::generator(f);
    return dihedral(5, -x, -x, f, name);
  }
  if (name == "I2(7)") {
    auto f = FieldDesc::number({Rat(1), Rat(-2), Rat(-1), Rat(1)}, "x");  // x = 2cos(pi/7)
    Scalar x = Scalar::generator(f);
    return dihedral(7, -x, -x, f, name);
  }
  if (name == "I2(8)") {
    auto f = FieldDesc::number({Rat(2), Rat(0), Rat(-4), Rat(0), Rat(1)}, "x");  // x = 2cos(pi/8)
    Scalar x = Scalar::generator(f);
    return dihedral(8, -x, -x, f, name);
  }
  if (name == "I2(4)-x0") return dihedral_int(4, 0, 0, name);
  if (name == "I2(4)-x0-f2") return dihedral_int(4, 0, 0, name, FieldDesc::prime(2));
  if (name == "I2(6)-a-1") return dihedral_int(6, -1, -1, name);
  if (name == "I2(9)-a-1") return dihedral_int(9, -1, -1, name);
  if (name == "I2(9)-a-1-f3") return dihedral_int(9, -1, -1, name, FieldDesc::prime(3));
  if (name == "I2(3)-q") {
    auto f = FieldDesc::ratfunc(FieldDesc::rationals(), "q");
    Scalar q = Scalar::generator(f);
    return dihedral(3, -q, -q.inverse(), f, name);
  }
  if (name == "A1xA1xA1") return rank3({2, 2, 2}, {0, 0, 0, 0, 0, 0}, name);
  if (name == "A2xA1") return rank3({3, 2, 2}, {-1, -1, 0, 0, 0, 0}, name);
  if (name == "B2xA1") return rank3({4, 2, 2}, {-1, -2, 0, 0, 0, 0}, name);
  if (name == "A3") return rank3({3, 3, 2}, {-1, -1, -1, -1, 0, 0}, name);
  if (name == "B3") return rank3({4, 3, 2}, {-2, -1, -1, -1, 0, 0}, name);
  throw std::invalid_argument("unknown built-in realization: " + name);
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {
      "A1", "A1xA1", "A2", "B2", "G2", "I2(5)", "I2(7)", "I2(8)",
      "I2(4)-x0", "I2(4)-x0-f2", "I2(6)-a-1", "I2(9)-a-1", "I2(9)-a-1-f3", "I2(3)-q",
      "A1xA1xA1", "A2xA1", "B2xA1", "A3", "B3"};
  return all;
}

}  // namespace builtin

// --- TOML-subset realization configs ---
//
// Sections and keys (see docs/realization-toml.md):
//   name = "..."; generators = ["s","t"]
//   [field]   kind = "rationals"|"prime"|"numberfield"|"ratfunc",
//             p = 5, modulus = ["-1","-1","1"], variable = "x", base = "rationals"
//   [coxeter] rank = 2, m = [[1,3],[3,1]]
//   [cartan]  rows = [["2","-1"],["-1","2"]]

class TomlValue {
 public:
  enum class Kind { String, Integer, Array };
  Kind kind = Kind::String;
  std::string str;
  long long integer = 0;
  std::vector<TomlValue> array;

  const std::string& as_string() const {
    if (kind == Kind::Integer) { cached_ = std::to_string(integer); return cached_; }
    return str;
  }
  long long as_int() const {
    if (kind == Kind::Integer) return integer;
    return std::stoll(str);
  }

 private:
  mutable std::string cached_;
};

class TomlTable {
 public:
  std::map<std::string, TomlValue> values;

  const TomlValue* find(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  }
  const TomlValue& get(const std::string& key) const {
    auto* v = find(key);
    if (!v) throw std::invalid_argument("missing config key: " + key);
    return *v;
  }
};

class TomlDoc {
 public:
  std::map<std::string, TomlTable> tables;  // "" is the root table

  static TomlDoc parse(const std::string& text);

  const TomlTable& table(const std::string& name) const {
    auto it = tables.find(name);
    if (it == tables.end()) throw std::invalid_argument("missing config section: [" + name + "]");
    return it->second;
  }
  bool has(const std::string& name) const { return tables.count(name) > 0; }
};

namespace detail_toml {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline TomlValue parse_value(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  TomlValue v;
  if (i >= s.size()) throw std::invalid_argument("config: missing value");
  if (s[i] == '"') {
    ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != '"') ++i;
    if (i >= s.size()) throw std::invalid_argument("config: unterminated string");
    v.kind = TomlValue::Kind::String;
    v.str = s.substr(start, i - start);
    ++i;
    return v;
  }
  if (s[i] == '[') {
    ++i;
    v.kind = TomlValue::Kind::Array;
    for (;;) {
      skip_ws(s, i);
      if (i < s.size() && s[i] == ']') { ++i; break; }
      v.array.push_back(parse_value(s, i));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') { ++i; continue; }
      if (i < s.size() && s[i] == ']') { ++i; break; }
      throw std::invalid_argument("config: expected ',' or ']' in array");
    }
    return v;
  }
  std::size_t start = i;
  while (i < s.size() && s[i] != ',' && s[i] != ']' && s[i] != '#' && s[i] != ' ' && s[i] != '\t')
    ++i;
  std::string tok = s.substr(start, i - start);
  if (tok.empty()) throw std::invalid_argument("config: empty value");
  v.kind = TomlValue::Kind::Integer;
  try {
    std::size_t used = 0;
    v.integer = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("not int");
  } catch (...) {
    v.kind = TomlValue::Kind::String;
    v.str = tok;
  }
  return v;
}

}  // namespace detail_toml

inline TomlDoc TomlDoc::parse(const std::string& text) {
  TomlDoc doc;
  std::string current;
  doc.tables[current] = {};
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    detail_toml::skip_ws(line, i);
    if (i >= line.size() || line[i] == '#') continue;
    if (line[i] == '[') {
      std::size_t close = line.find(']', i);
      if (close == std::string::npos) throw std::invalid_argument("config: bad section header");
      current = line.substr(i + 1, close - i - 1);
      doc.tables[current];
      continue;
    }
    std::size_t eq = line.find('=', i);
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key = value");
    std::string key = line.substr(i, eq - i);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::size_t j = eq + 1;
    doc.tables[current].values[key] = detail_toml::parse_value(line, j);
  }
  return doc;
}

inline FieldPtr field_from_config(const TomlTable& t) {
  std::string kind = t.get("kind").as_string();
  if (kind == "rationals") return FieldDesc::rationals();
  if (kind == "prime") return FieldDesc::prime(static_cast<std::uint64_t>(t.get("p").as_int()));
  if (kind == "numberfield") {
    std::vector<Rat> mod;
    for (const auto& c : t.get("modulus").array) mod.push_back(rat_parse(c.as_string()));
    std::string var = t.find("variable") ? t.get("variable").as_string() : "x";
    return FieldDesc::number(std::move(mod), var);
  }
  if (kind == "ratfunc") {
    FieldPtr base = FieldDesc::rationals();
    if (const auto* b = t.find("base")) {
      if (b->as_string() == "rationals") base = FieldDesc::rationals();
      else throw std::invalid_argument("config: ratfunc base must be \"rationals\"");
    }
    std::string var = t.find("variable") ? t.get("variable").as_string() : "q";
    return FieldDesc::ratfunc(base, var);
  }
  throw std::invalid_argument("config: unknown field kind: " + kind);
}

inline RealizationPtr realization_from_toml(const std::string& text) {
  TomlDoc doc = TomlDoc::parse(text);
  FieldPtr field = field_from_config(doc.table("field"));

  const TomlTable& cx = doc.table("coxeter");
  int rank = static_cast<int>(cx.get("rank").as_int());
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank));
  const auto& mrows = cx.get("m").array;
  if (static_cast<int>(mrows.size()) != rank) throw std::invalid_argument("config: m rows != rank");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(mrows[i].array.size()) != rank)
      throw std::invalid_argument("config: m row size != rank");
    for (int j = 0; j < rank; ++j) {
      long long v = mrows[i].array[j].as_int();
      m[i][j] = v < 0 ? 0 : static_cast<int>(v);  // negative encodes infinity too
    }
  }

  std::string gen_var;
  if (field->kind == FieldKind::Number || field->kind == FieldKind::RatFunc) gen_var = field->var;
  ScalarParser parser(field, gen_var);
  const TomlTable& ct = doc.table("cartan");
  std::vector<std::vector<Scalar>> cart(rank, std::vector<Scalar>(rank, Scalar::zero(field)));
  const auto& crows = ct.get("rows").array;
  if (static_cast<int>(crows.size()) != rank) throw std::invalid_argument("config: cartan rows != rank");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      cart[i][j] = parser.parse(crows[i].array[j].as_string());

  std::vector<std::string> gens;
  const TomlTable& root = doc.table("");
  if (const auto* g = root.find("generators"))
    for (const auto& s : g->array) gens.push_back(s.as_string());
  std::string name = root.find("name") ? root.get("name").as_string() : "custom";

  return std::make_shared<Realization>(CoxeterSystem(rank, std::move(m)), field, std::move(cart),
                                       std::move(gens), name);
}

}  // namespace heckeloc
